import time
from queue import Empty

from src.catalog.loader import load_catalog
from src.utils.configs import load_config
from src.utils.logger import log
from src.verify.Task import Result
from src.verify.verifier import verify_entry

# one catalog per process, keyed by its directory
_CATALOGS = {}


def process_catalog(catalog_dir):
    key = str(catalog_dir)
    if key not in _CATALOGS:
        _CATALOGS[key] = load_catalog(catalog_dir)
    return _CATALOGS[key]


class Worker:

    def __init__(self, name, task_queue, result_queue, stop, worker_status,
                 catalog_dir=None, guards=None, oracle_limits=None, catalog=None):
        self.name = name
        self.taskQueue = task_queue
        self.resultQueue = result_queue
        self.stop_flag = stop
        self.worker_status = worker_status
        self.catalog_dir = catalog_dir
        self.guards = guards
        self.oracle_limits = oracle_limits
        self.catalog = catalog
        self.max_retries = max(1, int(load_config()["max_retries"]))
        log.info(f'worker {name} was initialized')

    def _catalog(self):
        if self.catalog is None:
            self.catalog = process_catalog(self.catalog_dir)
        return self.catalog

    def process(self, task):
        start_time = time.time()
        log.info(f"worker {self.name} verifying {task.key}")
        error = None
        for attempt in range(self.max_retries):
            try:
                catalog = self._catalog()
                report = verify_entry(catalog.get(task.entry_id), task.assignment, catalog,
                                      self.guards, self.oracle_limits)
                return Result(
                    task_id=task.id,
                    worker_name=self.name,
                    entry_id=task.entry_id,
                    assignment=task.assignment.key(),
                    report=report,
                    success=True,
                    processing_time=time.time() - start_time,
                )
            except Exception as e:
                error = e
                log.error(f"Task {task.id} ({task.key}) failed on attempt {attempt + 1}: "
                          f"{type(e).__name__}: {e}")

        result = Result(
            task_id=task.id,
            worker_name=self.name,
            entry_id=task.entry_id,
            assignment=task.assignment.key(),
            success=False,
            error_message=f"{type(error).__name__}: {error}",
            processing_time=time.time() - start_time,
        )
        result.add_error(result.error_message)
        return result

    def run(self):
        while self.stop_flag == 0:
            try:
                self.worker_status[self.name] = "idle"
                task = self.taskQueue.get(timeout=1)
            except Empty:
                continue
            if task is None:
                break
            log.info(f"Worker {self.name} started task {task.id}")
            self.worker_status[self.name] = "busy"
            self.resultQueue.put(self.process(task))
            self.worker_status[self.name] = "idle"
        log.info(f"Worker {self.name} finished")
