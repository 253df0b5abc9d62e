import pytest

from permpat.verify import SUITES, run_suite


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("nonsense")

    def test_single_suite_names_are_prefixed(self):
        manifest = run_suite("proof-chain", seed=3)
        assert manifest.ok
        assert all(c.name.startswith("proof-chain:") for c in manifest.checks)
        assert manifest.seed == 3

    def test_deterministic_given_seed(self):
        a = run_suite("core", seed=99).as_dict()
        b = run_suite("core", seed=99).as_dict()
        assert a == b

    def test_all_runs_every_suite(self):
        manifest = run_suite("all", seed=0)
        assert manifest.ok
        prefixes = {c.name.split(":")[0] for c in manifest.checks}
        assert prefixes == set(SUITES)

    def test_suite_result_independent_of_grouping(self):
        # a suite inside "all" must match the suite run alone
        alone = [c for c in run_suite("catalan", seed=5).checks]
        grouped = [c for c in run_suite("all", seed=5).checks
                   if c.name.startswith("catalan:")]
        assert alone == grouped

    def test_manifest_shape(self):
        manifest = run_suite("proof-chain", seed=1)
        blob = manifest.as_dict()
        assert blob["command"] == "verify"
        assert blob["parameters"] == {"suite": "proof-chain"}
        assert blob["ok"] is True
        assert blob["summary"].endswith("checks passed")
        assert {"name", "passed", "detail"} == set(blob["checks"][0])
