"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : Shared fixtures of the test suite
"""

import os

import pytest

from config import Config
from models import ClassHistogram
from services.dataset_service import DatasetService

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures', 'golden')

PU_TDS_COUNTS = [
    ('DHCP', 346), ('ARP', 3235), ('ICMP', 24), ('HTTP', 1252), ('TCP', 11735),
    ('UDP', 585), ('ICMPv6', 2536), ('SSDP', 1571), ('NBNS', 642), ('MDNS', 118),
    ('LLMNR', 1031), ('BROWSER', 193), ('TLSv1', 5669), ('DB-LSP-DISC', 75), ('DHCPv6', 462),
    ('DNS', 4), ('HTTP/XML', 1), ('IAPP', 1), ('IGMP', 337), ('IPX RIP', 11),
    ('LLC', 146), ('NBIPX', 6), ('OCSP', 4), ('SSL', 13), ('XID', 3),
]


def golden_path(name):
    return os.path.join(GOLDEN_DIR, name)


def read_golden(name):
    with open(golden_path(name), 'r', encoding='utf-8', newline='') as f:
        return f.read()


def make_dataset(labels):
    """Dataset from a label sequence, positions 1..P."""
    text = 'No.,Protocol\n' + ''.join(f"{i},{label}\n" for i, label in enumerate(labels, start=1))
    return DatasetService.parse_records(text)


@pytest.fixture(scope='session')
def pu_tds_histogram():
    return DatasetService.read_histogram_spec(Config.HISTOGRAM_PATH)


@pytest.fixture(scope='session')
def pu_tds(pu_tds_histogram):
    return DatasetService.synthesize(pu_tds_histogram, seed=0, arrangement='shuffled')


@pytest.fixture(scope='session')
def pu_tds_grouped(pu_tds_histogram):
    return DatasetService.synthesize(pu_tds_histogram, seed=0, arrangement='grouped')


@pytest.fixture
def small_histogram():
    return ClassHistogram(entries=(('A', 5), ('B', 3), ('C', 1)))


@pytest.fixture
def small_dataset():
    return make_dataset(['A', 'B', 'A', 'C', 'A', 'B', 'A', 'B', 'A'])


def partitions(total, largest=None):
    """Every multiset of positive counts summing to total, largest part first."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in partitions(total - part, part):
            yield (part,) + rest


def histogram_of(counts):
    return ClassHistogram(entries=tuple((f"c{i}", c) for i, c in enumerate(counts)))
