# -*- coding: utf-8 -*-
"""
Queue-backed worker pool for independent study jobs
"""

import queue
import threading
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple

from loguru import logger

from lowreg import settings

Job = Tuple[Hashable, Callable[[], Any]]


class JobRunner:
    """Runs keyed jobs on `threads` daemon workers fed from one queue.

    Results come back as a dict keyed like the submissions, so the caller
    assembles tables in its own order regardless of completion order.
    With one thread the jobs run inline in submission order.
    """

    def __init__(self, threads: Optional[int] = None):
        self.threads = threads if threads is not None else settings.threads
        if self.threads < 1:
            raise ValueError(f"Invalid thread count {self.threads}, must be >= 1")
        self.job_queue: "queue.Queue[Optional[Job]]" = queue.Queue()
        self.results: Dict[Hashable, Any] = {}
        self.errors: Dict[Hashable, BaseException] = {}
        self._lock = threading.Lock()

    def _process_job_queue(self):
        while True:
            job = self.job_queue.get()
            try:
                if job is None:
                    break
                key, fn = job
                logger.debug(f"job {key} started")
                result = fn()
                with self._lock:
                    self.results[key] = result
                logger.debug(f"job {key} done")
            except BaseException as e:
                # the worker stays alive so its sentinel is still consumed
                logger.error(f"job {job[0]} failed: {e!r}")
                with self._lock:
                    self.errors[job[0]] = e
            finally:
                self.job_queue.task_done()

    def run(self, jobs: List[Job]) -> Dict[Hashable, Any]:
        """Execute all jobs, re-raising the first failure in submission order."""
        keys = [key for key, _ in jobs]
        if len(set(keys)) != len(keys):
            raise ValueError("Job keys must be unique")
        self.results = {}
        self.errors = {}

        if self.threads == 1 or len(jobs) <= 1:
            for key, fn in jobs:
                self.results[key] = fn()
            return self.results

        workers = [
            threading.Thread(target=self._process_job_queue, daemon=True)
            for _ in range(min(self.threads, len(jobs)))
        ]
        for worker in workers:
            worker.start()
        for job in jobs:
            self.job_queue.put(job)
        for _ in workers:
            self.job_queue.put(None)
        self.job_queue.join()
        for worker in workers:
            worker.join()

        for key in keys:
            if key in self.errors:
                raise self.errors[key]
        return self.results
