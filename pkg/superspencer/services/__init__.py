"""Services shared by the CLI commands."""
