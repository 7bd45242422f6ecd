"""
패키지 데이터 파일 테스트
"""

import hashlib

import pytest

from steadycert.config import DATA_DIR
from steadycert.utils.data_loader import (
    dataset_path,
    load_component_list,
    load_fixed_points,
    load_ideal,
    load_rational_map,
)

# 데이터 파일이 바뀌면 인증 결과도 바뀌므로 내용을 고정한다
CHECKSUMS = {
    "allwright_phi.json": "900c73509ff757840feb3a93fd89f88ba75c432f6aa09be7a7469690a989fe92",
    "components_J.json": "7c3132114d28c5fc4be317bc158540e8e85d6ef3a7df76843e23de35eddcc8c6",
    "minimal_primes_I.json": "fdaceea266f4591993ac1508669412adabb47318d6d6d653aede55c8deecf613",
    "quotient_components.json": "1eac7696f6505c97575bf2f91d7d33041b9efd21498438557f2d3f4afe846b0d",
}


class TestDataFiles:
    """데이터 파일 로딩"""

    def test_all_files_present(self):
        assert sorted(p.name for p in DATA_DIR.glob("*.json")) == sorted(CHECKSUMS)

    @pytest.mark.parametrize("name", sorted(CHECKSUMS))
    def test_checksum(self, name):
        digest = hashlib.sha256(dataset_path(name).read_bytes()).hexdigest()
        assert digest == CHECKSUMS[name]

    def test_path_with_or_without_suffix(self):
        assert dataset_path("components_J") == dataset_path("components_J.json")

    def test_minimal_primes(self):
        ideal = load_ideal("minimal_primes_I")
        assert ideal.context == ("s", "b", "g", "x1", "x3", "x5")
        for key in ("I1", "I2", "I3"):
            assert load_ideal("minimal_primes_I", key).context == ideal.context

    def test_ideals_are_fresh_objects(self):
        # 그뢰브너 기저 캐시가 호출 사이에 공유되지 않는다
        assert load_ideal("components_J", "J1") is not load_ideal("components_J", "J1")

    def test_j_components(self):
        j1 = load_ideal("components_J", "J1")
        assert len(j1) == 3

    def test_quotient_components(self):
        assert len(load_component_list("quotient_components")) == 5

    def test_rational_map(self):
        num, den, context = load_rational_map("allwright_phi")
        assert context == ("s", "b", "g", "u")
        assert not num.is_zero() and not den.is_zero()
        assert sorted(load_fixed_points("allwright_phi")) == ["u1", "u2"]

    def test_missing(self):
        with pytest.raises(FileNotFoundError):
            dataset_path("nothing_here")
        with pytest.raises(FileNotFoundError):
            load_ideal("nothing_here")
        with pytest.raises(KeyError):
            load_ideal("minimal_primes_I", "I9")
