# Tests package for cork-forge
