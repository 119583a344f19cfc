# The existence of this file makes this subfolder a "package"
