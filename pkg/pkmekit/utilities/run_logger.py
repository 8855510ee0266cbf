import os
import sys
from datetime import datetime
from time import sleep, time
from typing import Union

from batchgenerators.utilities.file_and_folder_operations import maybe_mkdir_p


class RunLogger(object):
    """
    Timestamped console/file logging for CLI runs. Messages always go to the log file (if one is set); they are only
    echoed to stderr when verbose is set so that stdout stays reserved for reports.
    """
    def __init__(self, verbose: bool = False, log_file: Union[str, None] = None):
        self.verbose = verbose
        self.log_file = log_file
        if log_file is not None:
            parent = os.path.dirname(os.path.abspath(log_file))
            maybe_mkdir_p(parent)

    def log(self, *args, add_timestamp: bool = True):
        if add_timestamp:
            args = (f"{datetime.fromtimestamp(time())}:", *args)

        if self.log_file is not None:
            successful = False
            max_attempts = 5
            ctr = 0
            while not successful and ctr < max_attempts:
                try:
                    with open(self.log_file, 'a+') as f:
                        f.write(" ".join(str(a) for a in args))
                        f.write("\n")
                    successful = True
                except IOError:
                    print(f"{datetime.fromtimestamp(time())}: failed to log: ", sys.exc_info(), file=sys.stderr)
                    sleep(0.5)
                    ctr += 1
        if self.verbose:
            print(*args, file=sys.stderr)
