from sacred import SETTINGS
from sacred.observers import MongoObserver, FileStorageObserver
from sys import stdout
import json
import sys

import hidproj.settings as settings
from hidproj.errors import FormatError, HiddenProjectorError

SUCCESS, FAILURE, USAGE_ERROR = 0, 1, 2

# fd capturing clashes with pytest and tqdm
SETTINGS.CAPTURE_MODE = 'sys'


class UsageError(Exception):
    """A required option is missing or an option has an unknown value."""


def get_observer():
    """Observer configured in hidproj.settings, or None to run unobserved."""
    if hasattr(settings, 'EXPERIMENT_DB_HOST') and settings.EXPERIMENT_DB_HOST:
        return MongoObserver.create(url='mongodb://{user}:{pwd}@{host}/{db}'.format(
                                        host=settings.EXPERIMENT_DB_HOST,
                                        user=settings.EXPERIMENT_DB_USER,
                                        pwd=settings.EXPERIMENT_DB_PWD,
                                        db=settings.EXPERIMENT_DB_NAME),
                                    db_name=settings.EXPERIMENT_DB_NAME)
    elif hasattr(settings, 'EXPERIMENT_STORAGE_FOLDER') \
            and settings.EXPERIMENT_STORAGE_FOLDER:
        return FileStorageObserver.create(settings.EXPERIMENT_STORAGE_FOLDER)
    return None


def attach_observer(experiment):
    observer = get_observer()
    if observer is not None:
        experiment.observers.append(observer)


def require(**options):
    """Raise UsageError naming every option that is still None."""
    missing = sorted(name for name, value in options.items() if value is None)
    if missing:
        raise UsageError('missing required option(s): {}'.format(', '.join(missing)))


def exit_code(error):
    """Map an exception raised by a command to its exit code and print it."""
    if isinstance(error, (UsageError, OSError, FormatError)):
        code = USAGE_ERROR
    elif isinstance(error, HiddenProjectorError):
        code = FAILURE
    else:
        raise error
    message = str(error)
    if not message.startswith('ERROR'):
        message = 'ERROR: {}'.format(message)
    print(message)
    stdout.flush()
    return code


def to_builtin(value):
    """numpy values to plain python, so reports serialize as JSON."""
    if hasattr(value, 'tolist'):
        return value.tolist()
    if isinstance(value, dict):
        return {key: to_builtin(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_builtin(item) for item in value]
    return value


def report(_run, measurements, json_report=False):
    """Print a command's results and store them in the run record."""
    measurements = to_builtin(measurements)
    for key, value in measurements.items():
        print('{:>12}: {}'.format(key, value))
    _run.info['measurements'] = measurements
    if json_report:
        print(json.dumps(measurements, indent=1, sort_keys=True))
    stdout.flush()


def run_and_exit(experiment):
    """Run from the command line; the command's return value is the exit code."""
    run = experiment.run_commandline()
    if run is None or run.result is None:
        sys.exit(SUCCESS)
    sys.exit(run.result)
