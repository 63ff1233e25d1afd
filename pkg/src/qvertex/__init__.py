"""Vertex functions of quiver varieties, their chamber limits and 3d-mirror checks."""
