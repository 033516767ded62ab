"""cork-forge: handle-calculus engine for exotic families built by cork modifications"""

__version__ = '0.1.0'
