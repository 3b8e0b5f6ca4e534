"""
Stand-alone `frackernel` console script: runs the management commands of
the app without a Django project.

    frackernel eval --base gauss --d 1 --beta 0.5 --mode sub --t 1 --rho 1
"""
import os
import sys

import django
from django.conf import settings
from django.core.management import load_command_class


COMMANDS = ('eval', 'validate', 'moments', 'sample', 'asym')


def configure():
    """
    Minimal settings when no DJANGO_SETTINGS_MODULE is given.
    """
    if settings.configured or os.environ.get('DJANGO_SETTINGS_MODULE'):
        return
    settings.configure(
        INSTALLED_APPS=['frackernel'],
        LOGGING={
            'version': 1,
            'disable_existing_loggers': False,
            'handlers': {'console': {'class': 'logging.StreamHandler'}},
            'loggers': {'frackernel': {'handlers': ['console'], 'level': 'WARNING'}},
        },
    )


def main(argv=None):
    argv = list(sys.argv if argv is None else argv)
    configure()
    django.setup()

    if len(argv) < 2 or argv[1] in ('-h', '--help', 'help'):
        sys.stdout.write('Usage: frackernel <command> [options]\n\nCommands: %s\n' % ', '.join(COMMANDS))
        return 0

    if argv[1] not in COMMANDS:
        sys.stderr.write('Unknown command %r. Commands: %s\n' % (argv[1], ', '.join(COMMANDS)))
        return 2

    command = load_command_class('frackernel', argv[1])
    command.run_from_argv([os.path.basename(argv[0]), argv[1]] + argv[2:])
    return 0


if __name__ == '__main__':
    sys.exit(main())
