'''
Runs the law registry over a corpus and collects one record per (law, instance).
'''

import logging
from typing import Any, Tuple

import attr

from filtrum import laws
from filtrum.certificate import ordered_map
from filtrum.errors import LawViolation

log = logging.getLogger(__name__)

GROUPS = ('ch1', 'ch2', 'ch3')


@attr.s(frozen=True, auto_attribs=True)
class Record:
    law: str
    anchor: str
    instance: str
    passed: bool
    counterexample: Any = None

    def to_dict(self):
        out = {'law': self.law, 'anchor': self.anchor, 'instance': self.instance, 'passed': self.passed}
        if not self.passed:
            out['counterexample'] = self.counterexample
        return out


@attr.s(frozen=True, auto_attribs=True)
class SuiteReport:
    name: str
    records: Tuple[Record, ...]

    @property
    def passed(self):
        return all(r.passed for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    def to_dict(self):
        return {
            'suite': self.name,
            'passed': self.passed,
            'total': len(self.records),
            'failed': len(self.failures),
            'records': [r.to_dict() for r in self.records],
        }


def groups_for(selection):
    if selection == 'all':
        return GROUPS
    if selection not in GROUPS:
        raise ValueError('unknown law group {0}'.format(selection))
    return (selection,)


def _check(task):
    entry, instance = task
    try:
        counterexample = entry.check(instance.value)
    except LawViolation as exc:
        counterexample = {'law': exc.law, 'counterexample': exc.counterexample}
    if counterexample is not None:
        log.warning("law %s failed on %s", entry.id, instance.name)
    return Record(law=entry.id, anchor=entry.anchor, instance=instance.name,
                  passed=counterexample is None, counterexample=counterexample)


def run_suite(corpus, selection='all', workers=None, name=None):
    '''
    Checks every selected law on every corpus instance of its kind.

    Records come back in registry order, then corpus order, whatever the worker
    count. Cap overruns propagate.
    '''
    tasks = []
    for entry in laws.selected(groups_for(selection)):
        for instance in corpus.of_kind(entry.kind):
            if entry.applies(instance.value):
                tasks.append((entry, instance))
    log.debug("running %d law checks", len(tasks))
    records = ordered_map(_check, tasks, workers)
    return SuiteReport(name=name or selection, records=tuple(records))
