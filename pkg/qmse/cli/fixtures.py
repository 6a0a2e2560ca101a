import os

from ..base.errors import DatasetError
from .ingest import ingest


__all__ = (
    'FIXTURE_DIR',
    'fixture_path',
    'list_fixtures',
    'load_fixture',
)


FIXTURE_DIR = os.path.join(os.path.dirname(__file__), 'data')


def list_fixtures():
    """ The names of the bundled datasets, sorted. """
    return sorted(
        os.path.splitext(fn)[0] for fn in os.listdir(FIXTURE_DIR)
        if fn.endswith('.csv'))


def fixture_path(name):
    name = os.path.splitext(str(name))[0]
    if name not in list_fixtures():
        raise DatasetError("unknown fixture {!r}, available: {}".format(
            name, ', '.join(list_fixtures())))
    return os.path.join(FIXTURE_DIR, name + '.csv')


def load_fixture(name, require_values=False):
    """
    Load a bundled dataset.

    Available fixtures:

    - ``fattyacids``: seven C34 polyunsaturated fatty acids, carboxylic head
      first, without labels.
    - ``alkanes_phase``: twelve small alkanes, label 1 if gaseous at 100 °C.
    - ``alkanes_bp``: ten small molecules with boiling points in Kelvin.

    Returns
    -------
    records : list of DatasetRecord

    """
    return ingest(fixture_path(name), 'csv', require_values=require_values)
