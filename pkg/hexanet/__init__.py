# Exact matrix / rhombus-tiling network correspondence
__version__ = "1.0.0"
