"""Allow running as python -m xordual."""

from .main import main

if __name__ == "__main__":
    main()
