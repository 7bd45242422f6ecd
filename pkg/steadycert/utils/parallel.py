"""
병렬 실행 도우미

표본/격자 점마다 독립인 작업을 프로세스 풀로 나눠 실행한다.
Pool.map은 입력 순서대로 결과를 돌려주므로 보고서는 인덱스 순서로 모인다.
작업 함수는 피클 가능해야 한다 (모듈 최상위 함수).
"""

import logging
from functools import partial
from multiprocessing import Pool
from typing import Any, Callable, Iterable

from steadycert import config

logger = logging.getLogger(__name__)


def parallel_map(func: Callable[..., Any], items: Iterable[Any], jobs: int | None = None, **kwargs) -> list[Any]:
    """
    순서를 보존하는 map

    Args:
        func: 최상위 함수
        items: 입력 목록
        jobs: 워커 수 (None이면 설정값, 0이면 전체 코어, 1이면 순차 실행)
        **kwargs: func에 고정으로 넘길 키워드 인자

    Returns:
        입력 순서의 결과 목록
    """
    items = list(items)
    worker = partial(func, **kwargs) if kwargs else func
    workers = min(config.resolve_jobs(jobs), len(items))
    if workers <= 1:
        return [worker(item) for item in items]
    chunksize = max(1, len(items) // (workers * 4))
    logger.debug("parallel_map: %d개 작업, 워커 %d개, chunksize=%d", len(items), workers, chunksize)
    with Pool(processes=workers) as pool:
        return pool.map(worker, items, chunksize=chunksize)
