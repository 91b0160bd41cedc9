from hypothesis import strategies as st

from kkschur.partitions import make_partition


def partitions(max_part: int = 6, max_len: int = 6):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda xs: make_partition(sorted(xs, reverse=True)))


def bounded(k: int, max_len: int = 6):
    return partitions(k, max_len)
