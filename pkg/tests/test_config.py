import pytest

from config import Budget, Settings, resolve_budget
from utils.file_cache import ReportCache, get_cache


class TestBudget:
    def test_from_settings(self):
        source = Settings(TW_MAX_VERTICES=20, WL_MAX_VERTICES=5)
        budget = Budget.from_settings(source)
        assert budget.tw_vertices == 20 and budget.wl_vertices == 5

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("TIEDWIDTH_HAD_MAX_VERTICES", "7")
        assert Budget.from_settings(Settings()).had_vertices == 7

    def test_overrides(self):
        budget = Budget().with_overrides({"tw_vertices": 16})
        assert budget.tw_vertices == 16
        assert budget.bw_edges == Budget().bw_edges

    def test_unknown_override(self):
        with pytest.raises(ValueError, match="bogus"):
            Budget().with_overrides({"bogus": 1})

    def test_frozen(self):
        with pytest.raises(ValueError):
            Budget().tw_vertices = 3

    def test_resolve(self):
        explicit = Budget(tw_vertices=2)
        assert resolve_budget(explicit) is explicit
        assert resolve_budget(None) == Budget.from_settings()

    def test_negative_setting_rejected(self):
        with pytest.raises(ValueError):
            Settings(SWEEP_WORKERS=0)


class TestReportCache:
    def test_set_and_get(self, tmp_path):
        cache = ReportCache(str(tmp_path))
        key = cache.cache_key("p tw 1 0\n", "{}")
        assert cache.get(key) is None
        assert cache.set(key, {"graph_id": "g"})
        assert cache.get(key) == {"graph_id": "g"}

    def test_key_depends_on_budget(self, tmp_path):
        cache = ReportCache(str(tmp_path))
        assert cache.cache_key("p tw 1 0\n", "a") != cache.cache_key("p tw 1 0\n", "b")

    def test_corrupted_file_is_dropped(self, tmp_path):
        cache = ReportCache(str(tmp_path))
        key = cache.cache_key("p tw 1 0\n", "{}")
        (tmp_path / f"{key}.json").write_text("{not json", encoding="utf-8")
        assert cache.get(key) is None
        assert not (tmp_path / f"{key}.json").exists()

    def test_invalidate(self, tmp_path):
        cache = ReportCache(str(tmp_path))
        key = cache.cache_key("x", "y")
        cache.set(key, {})
        assert cache.invalidate(key)
        assert not cache.invalidate(key)

    def test_get_cache_follows_settings(self, tmp_path, monkeypatch):
        assert get_cache() is None
        monkeypatch.setattr("config.settings.REPORT_CACHE_DIR", str(tmp_path / "a"))
        first = get_cache()
        assert first is get_cache()
        monkeypatch.setattr("config.settings.REPORT_CACHE_DIR", str(tmp_path / "b"))
        assert get_cache() is not first
