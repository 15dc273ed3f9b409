"""Allow ``python -m lsgsb`` to behave like the ``lsgsb`` console script."""

from .cli import main

if __name__ == "__main__":
    main()
