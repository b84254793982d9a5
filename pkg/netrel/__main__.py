"""Allow running as: python -m netrel"""
import sys

from .cli import main

sys.exit(main())
