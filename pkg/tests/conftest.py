import logging

logging.basicConfig(level="DEBUG")
# galois compiles its ufuncs with numba, which logs every pass at DEBUG
logging.getLogger("numba").setLevel(logging.WARNING)
