"""
Cyclic Descents - command-line entry point
"""

from dotenv import load_dotenv

# Load environment variables before the package reads its configuration
load_dotenv()

from src.cyclic_descents.cli import cli  # noqa: E402


if __name__ == "__main__":
    cli()
