import pytest

from laddermap.core import Category, Element, Lexicon
from laddermap.demo import load_demo
from laddermap.hvm import Hvm, HvmConfig, HvmEdge

_criteria: dict[int, tuple[str, list[bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for number, title in getattr(report, "criteria", ()):
        _criteria.setdefault(number, (title, []))[1].append(report.passed)


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    report.criteria = [tuple(m.args) for m in item.iter_markers("criterion")]
    return report


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, results = _criteria[number]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title} ({sum(results)}/{len(results)} checks)")


@pytest.fixture(scope="session")
def demo():
    return load_demo()


# Edges quoted for the goal-setting ladder.  The 6-weight edge into
# 'honesty and credibility' (32) may leave either 'more money' (27) or
# 'add value to stakeholders' (29); both readings are provided.
GOAL_SETTING_EDGES = [
    (3, 24, 13),
    (3, 23, 7),
    (23, 17, 14),
    (17, 18, 4),
    (18, 26, 6),
    (26, 27, 5),
    (27, 29, 13),
    (None, 32, 6),
    (32, 34, 14),
]

GOAL_SETTING_LEXICON = Lexicon(
    [
        Element(3, "Goal setting", Category.ATTRIBUTE),
        Element(17, "Continuous learning", Category.CONSEQUENCE),
        Element(18, "Distinctive competence", Category.CONSEQUENCE),
        Element(23, "Improving results", Category.CONSEQUENCE),
        Element(24, "Knowledge of data", Category.CONSEQUENCE),
        Element(26, "Lower cost", Category.CONSEQUENCE),
        Element(27, "More money", Category.CONSEQUENCE),
        Element(29, "Add value to stake holders", Category.VALUE),
        Element(32, "Honesty and credibility", Category.VALUE),
        Element(34, "Serving the society", Category.VALUE),
    ]
)


def goal_setting_hvm(honesty_source: int) -> Hvm:
    edges = [HvmEdge(honesty_source if a is None else a, b, w) for a, b, w in GOAL_SETTING_EDGES]
    return Hvm(HvmConfig(cutoff=4), GOAL_SETTING_LEXICON, tuple(edges))


@pytest.fixture(params=[27, 29], ids=["27->32", "29->32"])
def goal_setting(request):
    return goal_setting_hvm(request.param)
