# https://www.python.org/dev/peps/pep-0440/
version_str = "0.1.0"
