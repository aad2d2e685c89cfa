import sys

from quatdiv.cli import main

sys.exit(main())
