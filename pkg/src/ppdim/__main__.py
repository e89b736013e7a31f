from .cli.main import _main

raise SystemExit(_main())
