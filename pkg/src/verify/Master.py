import time
from multiprocessing import Manager, Process, Queue
from queue import Empty
from threading import Thread

from src.utils.configs import get_worker_bounds
from src.utils.logger import log
from src.verify.Worker import Worker


class Master:
    def __init__(self, task_queue=None, result_queue=None, worker_status=None, n=3,
                 catalog_dir=None, guards=None, oracle_limits=None, on_result=None):
        self.task_queue = task_queue if task_queue is not None else Queue()
        self.result_queue = result_queue if result_queue is not None else Queue()
        self.worker_status = worker_status if worker_status is not None else Manager().dict()

        # clamp the requested job count into the configured range
        min_workers, max_workers = get_worker_bounds()
        self.workers = min(max(n, min_workers), max_workers)

        self.catalog_dir = catalog_dir
        self.guards = guards
        self.oracle_limits = oracle_limits
        self.on_result = on_result
        self.worker_list = []
        self.results = []
        self.number_of_Tasks = 0
        self.completed_tasks = 0
        self.stop = 0

    def add_tasks(self, tasks):
        # lowest priority number first, ties in id order
        for task in sorted(tasks, key=lambda t: (t.priority, t.id)):
            self.task_queue.put(task)
            self.number_of_Tasks += 1
        log.info(f"Added {len(tasks)} tasks")

    def start_workers(self):
        log.info(f"Starting {self.workers} workers")
        for i in range(self.workers):
            worker = Worker(i, self.task_queue, self.result_queue, self.stop, self.worker_status,
                            self.catalog_dir, self.guards, self.oracle_limits)
            process = Process(target=worker.run)
            self.worker_list.append(process)
            process.start()

    def stop_workers(self):
        log.info("Stopping workers")
        self.stop = 1

        for _ in range(len(self.worker_list)):
            self.task_queue.put(None)

        for worker in self.worker_list:
            worker.join(timeout=5)
            if worker.is_alive():
                worker.terminate()

    def collect_results(self):
        log.info("Collecting results")
        while self.completed_tasks < self.number_of_Tasks:
            try:
                result = self.result_queue.get(timeout=1.0)
            except Empty:
                if self.worker_list and not any(w.is_alive() for w in self.worker_list):
                    log.error("All workers exited with tasks outstanding")
                    break
                continue
            self.results.append(result)
            self.completed_tasks += 1
            if result.success:
                log.info(f"Task {result.task_id} ({result.entry_id} at {result.assignment}) "
                         f"completed by worker {result.worker_name}")
            else:
                log.warning(f"Task {result.task_id} failed: {result.error_message}")
            if self.on_result is not None:
                self.on_result(result)

    def monitor(self, interval=1.0):
        reported = -1
        while self.completed_tasks < self.number_of_Tasks:
            if self.worker_list and not any(w.is_alive() for w in self.worker_list):
                break
            if self.completed_tasks != reported:
                reported = self.completed_tasks
                busy = sum(1 for status in self.worker_status.values() if status == "busy")
                log.info(f"Monitoring: {reported}/{self.number_of_Tasks} tasks done, {busy} workers busy")
            time.sleep(interval)

    def run(self, tasks):
        try:
            self.add_tasks(tasks)
            self.start_workers()
            thread = Thread(target=self.collect_results)
            thread.start()
            self.monitor()
            thread.join()
            return self.results
        finally:
            self.stop_workers()
