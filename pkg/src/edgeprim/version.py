TOOL_VERSION = "0.1.0"
CERTIFICATE_SCHEMA_VERSION = 1
