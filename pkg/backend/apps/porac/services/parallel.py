import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar('T')
R = TypeVar('R')

# Chunk boundaries depend on the problem size only, never on the worker count.
CHUNK_SIZE = 4096


def chunks(total: int, size: int = CHUNK_SIZE) -> List[range]:
    """Split range(total) into consecutive ranges of at most `size` items."""
    return [range(start, min(start + size, total)) for start in range(0, total, size)]


def map_ordered(fn: Callable[[T], R], tasks: Iterable[T], threads: int = 1) -> List[R]:
    """Apply fn to every task, results in task order whatever the schedule."""
    tasks = list(tasks)
    if threads <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=min(threads, len(tasks))) as executor:
        return list(executor.map(fn, tasks))


def ordered_sum(values: Iterable[float]) -> float:
    """Correctly rounded sum; the result does not depend on partial-sum order."""
    return math.fsum(values)
