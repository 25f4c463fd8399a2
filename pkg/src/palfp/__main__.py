import sys

from palfp.cli import main

sys.exit(main())
