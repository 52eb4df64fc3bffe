import sys

from chronokit.cli import main

sys.exit(main())
