"""Run reports and check records."""

from .records import (CheckRecord, Report, verdict, recorded, timed, PASS, FAIL, RECORDED,
                      STATUSES)

__all__ = ['CheckRecord', 'Report', 'verdict', 'recorded', 'timed', 'PASS', 'FAIL',
           'RECORDED', 'STATUSES']
