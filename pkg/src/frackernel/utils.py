import os
import io
import csv
import json
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

from frackernel.core.exceptions import ConfigurationException


def get_setting(name, default=None):
    """
    Read `name` from the Django settings, or return `default` when the
    settings are not configured (plain library use).

    -- settings.py --
    FRACKERNEL_QUADRATURE = { 'rel_tol': 1e-10 }
    """
    if not settings.configured:
        return default
    return getattr(settings, name, default)


def get_quad_options():
    """
    Return the list of dash-named QuadConfig options found in the settings.

    -- settings.py --
    FRACKERNEL_QUADRATURE = {
        'rel_tol': 1e-9,
        'max_depth': 60,
        'tail': 'analytic',           # or ('truncate', 1e10)
    }
    """
    options = get_setting('FRACKERNEL_QUADRATURE', {})
    if not isinstance(options, dict):
        raise ConfigurationException('settings.FRACKERNEL_QUADRATURE', 'expected a dict')

    result = []
    for key, value in sorted(options.items()):
        if key == 'tail':
            if value == 'analytic':
                result.append('analytic-tail')
            elif isinstance(value, (tuple, list)) and len(value) == 2 and value[0] == 'truncate':
                result.append('truncate-tail=%r' % float(value[1]))
            else:
                raise ConfigurationException('settings.FRACKERNEL_QUADRATURE', 'bad tail policy %r' % (value,))
        else:
            result.append('%s=%r' % (key.replace('_', '-'), value))
    return result


def get_thread_count():
    """
    Worker cap for grid sweeps: FRACKERNEL_THREADS from the environment,
    then from the settings, then the number of available cores.
    """
    value = os.environ.get('FRACKERNEL_THREADS') or get_setting('FRACKERNEL_THREADS', None)
    if value in (None, ''):
        return os.cpu_count() or 1
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ConfigurationException('FRACKERNEL_THREADS', 'not an integer: %r' % (value,))
    if value < 1:
        raise ConfigurationException('FRACKERNEL_THREADS', 'must be at least 1')
    return value


def map_ordered(function, items, workers=None):
    """
    Apply `function` to every item on a thread pool; results come back in
    the order of `items`, whatever the completion order.
    """
    items = list(items)
    workers = min(workers or get_thread_count(), max(len(items), 1))
    if workers == 1:
        return [function(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items))


def read_config_file(path):
    """
    Parse a `key = value` file. Blank lines and lines starting with '#' are
    skipped; dashes in keys are turned into underscores.
    """
    result = {}
    with io.open(path, 'r', encoding='utf-8') as f:
        for number, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise ConfigurationException('%s line %i' % (path, number), 'expected "key = value"')
            key, value = line.split('=', 1)
            result[key.strip().replace('-', '_')] = value.strip()
    return result


# =======[ Table output ]======

def format_number(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return '%.17g' % value
    return value


def _json_value(value):
    # '%.17g' round-trips a double, so parse it back for a plain JSON number.
    if isinstance(value, float):
        return float('%.17g' % value)
    return value


def write_table(stream, fmt, columns, rows, meta):
    """
    Write `rows` (sequences ordered like `columns`) as CSV or JSON.

    CSV: one header row, UTF-8, LF line endings.
    JSON: {"meta": {...}, "rows": [{column: value}, ...]}.
    """
    if fmt == 'csv':
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_number(v) for v in row])

    elif fmt == 'json':
        document = {
            'meta': meta,
            'rows': [dict(zip(columns, [_json_value(v) for v in row])) for row in rows],
        }
        stream.write(json.dumps(document, indent=1, sort_keys=True))
        stream.write('\n')

    else:
        raise ConfigurationException('--format', 'unknown output format %r' % (fmt,))
