"""This module provides a :class:`TrialWorker` class and :func:`run_trials` for
running independent fuzz trials on daemon threads.

Trials are identified by their index and every trial derives its random
streams from ``[seed, index, stream]``, so the results do not depend on which
worker ran a trial or in which order.

.. seealso:: :func:`run_trials` for examples and usage.
"""

from queue import Empty, Queue
from threading import Event, Lock, Thread
from typing import Callable, Dict, Generic, List, Optional, TypeVar

from .logging import LOGGER

__all__ = ["TrialWorker", "run_trials", "trial_seed"]

T = TypeVar("T")


def trial_seed(seed: int, index: int, stream: int = 0) -> List[int]:
    """Seed of one random stream of one trial, for :func:`numpy.random.default_rng`"""
    return [seed, index, stream]


class TrialWorker(Thread, Generic[T]):
    """Worker running trials from a shared queue as a daemon thread

    Note:
        * The thread will always be started daemonized.
        * The thread stops when the queue is empty or :meth:`stop` was called.
        * The first exception of a trial is kept and stops the worker.

    Args:
        trial (:obj:`Callable`): Function of the trial index
        indices (:obj:`queue.Queue`): Trial indices still to run
        results (:obj:`dict`): Shared mapping of trial index to result
        lock (:obj:`threading.Lock`): Guards ``results``
        name (:obj:`str`, optional): Name of the thread

    Attributes:
        error (:obj:`BaseException`, optional): Exception raised by a trial
        failed_index (:obj:`int`, optional): Index of the trial that raised
    """

    error: Optional[BaseException] = None
    failed_index: Optional[int] = None

    def __init__(
        self,
        trial: Callable[[int], T],
        indices: "Queue[int]",
        results: Dict[int, T],
        lock: Lock,
        name: str = "",
    ) -> None:
        super().__init__(name=name, daemon=True)
        self.trial = trial
        self._indices = indices
        self._results = results
        self._lock = lock
        self._stopped = Event()

    def run(self) -> None:
        """Run trials until the queue is exhausted

        Warning:
            Do not call this method directly, use :meth:`threading.Thread.start` instead.
        """
        while not self._stopped.is_set():
            try:
                index = self._indices.get_nowait()
            except Empty:
                return
            try:
                result = self.trial(index)
            except BaseException as e:  # noqa: B902
                self.error = e
                self.failed_index = index
                return
            with self._lock:
                self._results[index] = result

    def stop(self, wait: bool = True) -> None:
        """Stop the thread after the current trial

        Args:
            wait (:obj:`bool`, optional): Wait for the thread to stop
        """
        self._stopped.set()
        if wait and self.is_alive():
            self.join()


def run_trials(trial: Callable[[int], T], count: int, workers: int = 1) -> List[T]:
    """Run ``trial(0), …, trial(count - 1)`` and collect the results in index order

    Example:

        .. code-block:: python

            def trial(index):
                rng = numpy.random.default_rng(trial_seed(7, index))
                return rng.random()

            run_trials(trial, 100, workers=4) == run_trials(trial, 100, workers=1)  # True

    Args:
        trial (:obj:`Callable`): Function of the trial index
        count (:obj:`int`): Number of trials
        workers (:obj:`int`, optional): Number of threads, ``1`` runs in the calling thread

    Returns:
        :obj:`list`: Results ordered by trial index

    Raises:
        Exception: The exception of the lowest failing trial index
    """
    if workers <= 1 or count <= 1:
        return [trial(index) for index in range(count)]

    indices: "Queue[int]" = Queue()
    for index in range(count):
        indices.put(index)
    results: Dict[int, T] = {}
    lock = Lock()
    threads = [
        TrialWorker(trial, indices, results, lock, name=f"trial-worker-{number}")
        for number in range(min(workers, count))
    ]
    LOGGER.debug("Running %d trials on %d threads", count, len(threads))
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    failed = [thread for thread in threads if thread.error is not None]
    if failed:
        first = min(failed, key=lambda thread: thread.failed_index or 0)
        assert first.error is not None
        raise first.error
    return [results[index] for index in range(count)]
