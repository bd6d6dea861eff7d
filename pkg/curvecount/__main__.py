import sys

from curvecount.main import main

sys.exit(main())
