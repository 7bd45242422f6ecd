"""
공용 fixture
"""

import sys
from pathlib import Path

import pytest
from hypothesis import settings

# 프로젝트 루트를 path에 추가
sys.path.insert(0, str(Path(__file__).parent.parent))

from steadycert.models.base_model import ParameterSet

# 정확한 산술은 예제마다 시간이 들쭉날쭉하다
settings.register_profile("steadycert", deadline=None, max_examples=40)
settings.load_profile("steadycert")


@pytest.fixture
def rep3d_params() -> ParameterSet:
    """3차원 감쇠 진동 예시 파라미터"""
    return ParameterSet.parse("s=0.3,b=4,g=0.6")


@pytest.fixture
def six_dim_params() -> ParameterSet:
    """6차원 모델 예시 파라미터"""
    return ParameterSet.parse("s=1,b=10,g=0.2")
