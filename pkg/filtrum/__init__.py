'''
Filters of finite commutative monoids, rings and topologies, the filtrum space
they form, and a law suite that checks the theory on small instances.
'''

__version__ = '0.1.0'
