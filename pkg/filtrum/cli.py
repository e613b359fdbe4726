'''
Command line front end. Every subcommand reads one document (or the built-in
corpus), writes a deterministic JSON or DOT report to stdout or --output, and
exits with the code of the first error: 1 validation, 2 law violation, 3 cap.
'''

import argparse
import json
import logging
import sys

from filtrum import config, corpus, documents, render
from filtrum.characterize import characterize_filtrum_space, local_opens
from filtrum.errors import DocumentError, FiltrumError
from filtrum.filt import build_filtrum, fixfilters
from filtrum.filters import all_filters, ultrafilters
from filtrum.monoid import members
from filtrum.suite import GROUPS, run_suite
from filtrum.topo import sobrify

log = logging.getLogger(__name__)


def _load(file_path, kinds):
    doc = documents.load_file(file_path)
    if doc.kind not in kinds:
        raise DocumentError('expected a {0} document, found {1}'.format(' or '.join(kinds), doc.kind),
                            file=file_path)
    return doc


def cmd_filters(args):
    doc = _load(args.file, ('monoid', 'ring'))
    M = doc.monoid
    family = all_filters(M)
    ultra = ultrafilters(M).masks if M.zero is not None and M.zero != M.one else []
    report = render.filters_json(family, ultra)
    report['monoid'] = doc.name
    return documents.dumps(report), 0


def cmd_filtrum(args):
    doc = _load(args.file, ('monoid', 'ring'))
    Phi = build_filtrum(doc.monoid)
    if args.format == 'dot':
        return render.filtrum_dot(Phi, name=doc.name), 0
    report = render.filtrum_json(Phi)
    report['monoid'] = doc.name
    return documents.dumps(report), 0


def cmd_fixfilters(args):
    doc = _load(args.file, ('monoid_hom',))
    result = fixfilters(doc.value)
    result.certificate.require()
    report = {
        'hom': doc.name,
        'source': [F.elements() for F in result.source],
        'target': [G.elements() for G in result.target],
        'bijection': [[members(a), members(b)] for a, b in result.certificate.pairs],
        'holds': result.certificate.holds,
    }
    return documents.dumps(report), 0


def cmd_characterize(args):
    doc = _load(args.file, ('space',))
    X = doc.value
    result = characterize_filtrum_space(X)
    report = {'space': doc.name, 'local_opens': [X.label(U) for U in local_opens(X)]}
    if result:
        result.certificate.require()
        report.update({'verdict': 'success',
                       'monoid': documents.dump(result.monoid),
                       'psi': {X.points[x]: p for x, p in enumerate(result.psi)}})
    else:
        report.update({'verdict': 'failure', 'condition': result.condition, 'witness': result.witness})
    return documents.dumps(report), 0


def cmd_sobrify(args):
    doc = _load(args.file, ('space',))
    result = sobrify(doc.value)
    result.lattice.require()
    if args.format == 'dot':
        return render.sobrification_dot(doc.value, result, name=doc.name), 0
    return documents.dumps(documents.dump(result.space, name='{0}-sober'.format(doc.name))), 0


def cmd_order(args):
    doc = _load(args.file, ('space',))
    return render.specialization_dot(doc.value, name=doc.name), 0


def cmd_suite(args):
    if args.corpus:
        source, name = corpus.builtin(), 'corpus'
    else:
        doc = documents.load_file(args.file)
        source, name = corpus.from_document(doc), doc.name
    report = run_suite(source, args.laws, name='{0}:{1}'.format(name, args.laws))
    log.info("%d of %d checks passed", len(report.records) - len(report.failures), len(report.records))
    return documents.dumps(report.to_dict()), 0 if report.passed else 2


def build_parser():
    parser = argparse.ArgumentParser(prog='filtrum', description="filters of finite monoids, rings and spaces",
                                     epilog="""
        Exit codes: 0 ok, 1 invalid input, 2 a law failed, 3 a size cap was exceeded.""")
    parser.add_argument("-v", "--verbose", required=False, default=False, action='store_true',
                        help="prints verbose output")
    parser.add_argument("-o", "--output", required=False, help="write the report to this file")
    parser.add_argument("--config", required=False, help="YAML configuration file")
    parser.add_argument("--workers", required=False, type=int, help="parallel workers for oracles and suites")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('filters', help="list all filters of a monoid or ring document")
    p.add_argument('file')
    p.set_defaults(func=cmd_filters)

    p = sub.add_parser('filtrum', help="render the filtrum of a monoid or ring document")
    p.add_argument('file')
    p.add_argument('--format', choices=('dot', 'json'), default='json')
    p.set_defaults(func=cmd_filtrum)

    p = sub.add_parser('fixfilters', help="fixfilters of a monoid hom document")
    p.add_argument('file')
    p.set_defaults(func=cmd_fixfilters)

    p = sub.add_parser('characterize', help="decide whether a space is a filtrum")
    p.add_argument('file')
    p.set_defaults(func=cmd_characterize)

    p = sub.add_parser('sobrify', help="sobrification of a space document")
    p.add_argument('file')
    p.add_argument('--format', choices=('json', 'dot'), default='json')
    p.set_defaults(func=cmd_sobrify)

    p = sub.add_parser('order', help="specialization order of a space document as DOT")
    p.add_argument('file')
    p.set_defaults(func=cmd_order)

    p = sub.add_parser('suite', help="check the laws on a document or the built-in corpus")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('file', nargs='?')
    source.add_argument('--corpus', action='store_true', help="use the built-in corpus")
    p.add_argument('--laws', choices=GROUPS + ('all',), default='all')
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=stderr)
    try:
        config.configure(config.resolve(config_file=args.config, workers=args.workers))
        text, code = args.func(args)
    except FiltrumError as exc:
        stderr.write(json.dumps(exc.to_dict(), sort_keys=True, default=documents.plain) + '\n')
        return exc.exit_code
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as stream:
            stream.write(text)
    else:
        stdout.write(text)
    return code
