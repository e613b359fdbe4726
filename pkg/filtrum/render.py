'''
DOT and JSON renderings of filtra, specialization orders and sobrification maps.
All output is deterministic: nodes, edges and keys are emitted in sorted order.
'''

import logging
from os import path

import networkx as nx
from jinja2 import Environment, FileSystemLoader

from filtrum.errors import CapExceeded
from filtrum.filt import open_sets
from filtrum.filters import is_consistent
from filtrum.monoid import members
from filtrum.space import closure, specialization_graph

log = logging.getLogger(__name__)

TEMPLATE_DIR = path.join(path.dirname(path.abspath(__file__)), 'jinja2_templates')


def dot_escape(text):
    return str(text).replace('\\', '\\\\').replace('"', '\\"')


def _environment():
    j2_env = Environment(loader=FileSystemLoader(TEMPLATE_DIR), trim_blocks=True)
    j2_env.filters['dot_escape'] = dot_escape
    return j2_env


def hasse_edges(graph):
    '''Covering pairs of a strict order given as a DAG, in sorted order.'''
    return sorted(nx.transitive_reduction(graph).edges())


def filtrum_dot(Phi, name=None):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(Phi)))
    graph.add_edges_from((i, j) for i in range(len(Phi)) for j in members(Phi.up[i]) if i != j)
    nodes = [{'id': i, 'label': F.label(), 'closed': bool(Phi.closed_points >> i & 1)}
             for i, F in enumerate(Phi.points)]
    template = _environment().get_template('hasse.j2')
    return template.render(name=name or Phi.monoid.name or 'filtrum', nodes=nodes,
                           edges=hasse_edges(graph))


def specialization_dot(X, name=None):
    '''Hasse diagram of x ⪯ y; points with equal neighbourhoods share a node.'''
    condensed = nx.condensation(specialization_graph(X))
    order = sorted(condensed.nodes, key=lambda c: min(condensed.nodes[c]['members']))
    renumber = {c: k for k, c in enumerate(order)}
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(order)))
    graph.add_edges_from((renumber[a], renumber[b]) for a, b in condensed.edges)
    nodes = []
    for c in order:
        block = sorted(condensed.nodes[c]['members'])
        mask = sum(1 << x for x in block)
        nodes.append({'id': renumber[c], 'label': ','.join(X.points[x] for x in block),
                      'closed': closure(X, mask) == mask})
    template = _environment().get_template('hasse.j2')
    return template.render(name=name or 'space', nodes=nodes, edges=hasse_edges(graph))


def sobrification_dot(X, sobrification, name=None):
    template = _environment().get_template('sobrification.j2')
    return template.render(name=name or 'sobrification', source_name='X', target_name="X'",
                           source=list(X.points), target=list(sobrification.space.points),
                           arrows=list(enumerate(sobrification.map)))


def filtrum_json(Phi, cap=None):
    try:
        opens = len(open_sets(Phi, cap=cap))
    except CapExceeded:
        log.debug("open family of %s not enumerable within cap", Phi.monoid.name)
        opens = None
    return {
        'monoid': Phi.monoid.name,
        'points': [{'id': i, 'members': F.elements(), 'bits': F.members,
                    'consistent': is_consistent(F), 'closed': bool(Phi.closed_points >> i & 1)}
                   for i, F in enumerate(Phi.points)],
        'basis': {str(f): members(Phi.basis[f]) for f in range(Phi.monoid.size)},
        'opens': opens,
    }


def filters_json(family, ultra=()):
    ultra = set(ultra)
    return {
        'monoid': family.carrier.name,
        'filters': [{'id': i, 'members': F.elements(), 'bits': F.members,
                     'consistent': is_consistent(F), 'ultrafilter': F.members in ultra}
                    for i, F in enumerate(family)],
    }
