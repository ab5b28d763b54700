"""
Tests run without any configuration. To tune the enumeration oracles locally, make a .env file
in the project root with any of the following keys

LEIBNIZ_GUARD_BITS=24
LEIBNIZ_FORCED_GUARD_BITS=28
LEIBNIZ_WORKERS=1
LEIBNIZ_LOG_LEVEL=WARNING
"""
