import logging
from collections import namedtuple

from .budget import Budget

__all__ = ["GenerationSearch", "WitnessPool", "Walk"]

logger = logging.getLogger(__name__)

Walk = namedtuple("Walk", ["pool", "nodes", "prunes", "exhausted"])


class WitnessPool(object):
    '''
    Class represents the incumbent value with the nodes attaining it, keyed by a canonical
    byte string. Only the cap smallest keys are kept, so the retained set does not depend
    on the order of discovery.
    '''
    def __init__(self, cap, value=-1):
        self.value = value
        self.cap = cap
        self._nodes = {}

    def offer(self, value, node, key):
        if value < self.value:
            return False
        if value > self.value:
            self.value = value
            self._nodes = {}
        if key not in self._nodes:
            self._nodes[key] = node
            if len(self._nodes) > self.cap:
                del self._nodes[max(self._nodes)]
        return True

    def merge(self, other):
        for key, node in other.items():
            self.offer(other.value, node, key)
        if other.value > self.value:
            self.value = other.value
            self._nodes = {}
        return self

    def items(self):
        return sorted(self._nodes.items())

    def witnesses(self):
        return [node for _, node in self.items()]

    def __len__(self):
        return len(self._nodes)


class GenerationSearch(object):
    '''
    Base class for exhaustive generation with pruning: a depth-first walk that evaluates
    every node, keeps the best ones and skips subtrees whose bound falls below the incumbent
    '''
    def __init__(self, budget=None, witness_cap=100, **kwargs):
        self.history = []
        self._budget = Budget() if budget is None else budget
        self._cap = witness_cap
        self._par = kwargs

    def get_history(self):
        return self.history

    def solve(self, roots, incumbent=-1, deadline=None, disp=False):
        self.history = []
        pool = WitnessPool(self._cap, incumbent)
        stack = list(reversed(roots))
        nodes = prunes = 0
        exhausted = False
        self._budget.start(deadline)
        report_every = self._par.get("report_every", 1000)
        while stack:
            if self._budget(nodes):
                exhausted = True
                if disp:
                    logger.info("Budget exhausted after %d nodes", nodes)
                break
            node = stack.pop()
            nodes += 1
            value = self.evaluate(node)
            previous = pool.value
            pool.offer(value, node, self.node_key(node))
            if pool.value > previous:
                self.history.append((nodes, pool.value))
                if disp:
                    logger.info("New incumbent %d at node %d", pool.value, nodes)
            children = self.expand(node, pool.value)
            if children is None:
                prunes += 1
                continue
            stack.extend(reversed(children))
            if disp and nodes % report_every == 0:
                logger.info("Nodes %d, prunes %d, open %d, incumbent %d", nodes, prunes, len(stack), pool.value)
        return Walk(pool, nodes, prunes, exhausted)

    def frontier(self, roots, depth):
        '''
        Evaluate every node above the given depth breadth first and return the walk
        together with the unexpanded nodes at that depth
        '''
        pool = WitnessPool(self._cap)
        level = list(roots)
        nodes = prunes = 0
        for _ in range(depth):
            following = []
            for node in level:
                nodes += 1
                pool.offer(self.evaluate(node), node, self.node_key(node))
            for node in level:
                children = self.expand(node, pool.value)
                if children is None:
                    prunes += 1
                else:
                    following.extend(children)
            level = following
        return Walk(pool, nodes, prunes, False), level

    def evaluate(self, node):
        raise NotImplementedError("You have to provide method for evaluating a node!")

    def node_key(self, node):
        raise NotImplementedError("You have to provide a canonical key for a node!")

    def expand(self, node, best):
        '''
        Children of the node, or None when no descendant can reach best
        '''
        raise NotImplementedError("You have to provide method for expanding a node!")
