import hypothesis.strategies as st
from hypothesis import settings

from invsubst.endo import PHI_L, PHI_R, PI1, PI2, Endomorphism, compose_all
from invsubst.words import Word

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

raw_words = st.text(alphabet="abcABC", max_size=12)
words = raw_words.map(Word)
positive_text = st.text(alphabet="abc", min_size=1, max_size=5)

endomorphisms = st.tuples(words, words, words).map(lambda t: Endomorphism(*t))
substitutions = st.tuples(positive_text, positive_text, positive_text).map(
    lambda t: Endomorphism(*t).as_substitution()
)

# products of pi1, pi2, phi_l, phi_r: simple by construction
simple_subs = st.lists(st.sampled_from([PI1, PI2, PHI_L, PHI_R]), max_size=8).map(compose_all)


# one pass/fail line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
