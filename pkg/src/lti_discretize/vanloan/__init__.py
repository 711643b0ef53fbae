from .blocks import VanLoanBlocks, build_xi, extract_blocks
from .discretize import discretize

__all__ = ["VanLoanBlocks", "build_xi", "extract_blocks", "discretize"]
