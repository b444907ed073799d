# Copyright the halftwist authors
# Licensed under the MIT license

from .main import main

if __name__ == "__main__":
    main()
