from typing import Callable, Iterable, TypeVar

T = TypeVar("T")


def first(iterable: Iterable[T], default: T | None = None) -> T | None:
    return next(iter(iterable), default)


def first_index(iterable: Iterable[T], predicate: Callable[[T], bool] = bool) -> int | None:
    """Index of the first item satisfying the predicate (truthiness by default), None when there is none."""
    return first((index for index, item in enumerate(iterable) if predicate(item)), None)
