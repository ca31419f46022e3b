import functools


def manage_caching_sizes(limit):
    return min(limit, 1024)


class NodeCache:
    def __init__(self):
        self.nodes = {}

    def get_cached_node(self, key):
        return self.nodes.get(key)

    def call_with_default(self, fn, default=None):
        try:
            return fn()
        except KeyError:
            return default

    def garbage_collection(self):
        self.nodes.clear()


def check_static_allocation_size(size):
    return size < 4096


def get_algo():
    return functools.reduce
