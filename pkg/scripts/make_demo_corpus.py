"""Regenerate the bundled synthetic demo corpus.

The 34 element groups, their A/C/V categories and their reference occurrence
counts come from a coded set of interviews on analytics adoption; labels for
ids 14 and 15 are not recoverable and are marked as placeholders.  The ladders are invented.  They are built so that:

* there are 84 ladders from 10 respondents;
* element 1 leads to element 21 directly 17 times and indirectly once;
* element 21 leads to element 29 directly 18 times, the strongest link;
* every other element occurs exactly as often as its reference count,
  except elements 1 and 29, which the two links above force up to 18.

Run from the repository root:  python scripts/make_demo_corpus.py
"""

from pathlib import Path

ELEMENTS = [
    (1, "Data is accessible and supports decisions", "A"),
    (2, "Data online", "A"),
    (3, "Goal setting", "A"),
    (4, "Standardized procedures", "A"),
    (5, "High skilled staff", "A"),
    (6, "Enough support", "A"),
    (7, "High tech", "A"),
    (8, "Communication with customers and suppliers", "A"),
    (9, "Creativity to propose new ideas", "A"),
    (10, "Information outside the organization", "A"),
    (11, "Market research", "A"),
    (12, "The most efficient structure", "A"),
    (13, "Flexibility on management", "A"),
    (14, "Attribute 14 (label not recoverable)", "A"),
    (15, "Attribute 15 (label not recoverable)", "A"),
    (16, "Analyse data from market", "C"),
    (17, "Continuous learning", "C"),
    (18, "Distinctive competence", "C"),
    (19, "Exceeding the customer expectations", "C"),
    (20, "Good image of the organization", "C"),
    (21, "Improve data analysis", "C"),
    (22, "Improving process", "C"),
    (23, "Improving results", "C"),
    (24, "Knowledge of data", "C"),
    (25, "Long term relationships with actors", "C"),
    (26, "Lower cost", "C"),
    (27, "More money", "C"),
    (28, "Staff efficiency and motivation", "C"),
    (29, "Add value to stake holders", "V"),
    (30, "Being a leader", "V"),
    (31, "Communication and trust", "V"),
    (32, "Honesty and credibility", "V"),
    (33, "Passion, Quality and Excellence", "V"),
    (34, "Serving the society", "V"),
]

# (repetitions, ladder)
TEMPLATES = [
    (17, "1>21>29"),
    (1, "1>24>21>29"),
    (9, "4>28>31"),
    (1, "4>28>33"),
    (5, "3>24>23>27>34"),
    (1, "3>24>26>27>32"),
    (3, "3>23>17>18>26>27>33"),
    (2, "3>23>18>27>32"),
    (7, "2>22>25>30"),
    (2, "2>20>30"),
    (3, "2>19>33"),
    (1, "5>28>19>34"),
    (3, "5>19>33"),
    (3, "5>20>34"),
    (2, "6>23>27>34"),
    (1, "6>16>20>33"),
    (2, "6>23>32"),
    (1, "6>16"),
    (1, "7>16>34"),
    (2, "9>10>16"),
    (1, "11>12>18"),
    (1, "8>13>26"),
    (4, "7>8"),
    (3, "9>10>11"),
    (1, "11>12"),
    (3, "12>13"),
    (3, "14>15"),
    (1, "7>14"),
]

RESPONDENTS = 10


def main(out_dir=Path("src/laddermap/data")):
    out_dir.mkdir(parents=True, exist_ok=True)
    lex = [
        "# Synthetic demo lexicon. Element groups come from a coded interview study;",
        "# labels for ids 14 and 15 are placeholders.",
        "id,label,category",
    ]
    for i, label, cat in ELEMENTS:
        quoted = f'"{label}"' if "," in label else label
        lex.append(f"{i},{quoted},{cat}")
    (out_dir / "demo_lexicon.csv").write_text("\n".join(lex) + "\n", encoding="utf-8")

    ladders = [steps for reps, steps in TEMPLATES for _ in range(reps)]
    lines = [
        "# Synthetic demo ladders: invented data, not interview records.",
        "# Built to agree with a few reported counts; see scripts/make_demo_corpus.py.",
    ]
    for n, steps in enumerate(ladders):
        lines.append(f"R{n % RESPONDENTS + 1:02d};{steps}")
    (out_dir / "demo_ladders.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
