#!/usr/bin/env python3
# Copyright 2026 The cforge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates the ISANUM-shaped fixture under fixtures/isanum.

The block and competency statements are the published ISANUM ones. Every
knowledge area, topic, course, outcome, student and achievement page is
synthetic: only the counts follow the program (34 areas, 494 topics,
13 skills, 11 dispositions, 23 students, 931 pages, 7805 linked
specifications, 3747 revisions). The output is deterministic.

usage: gen_isanum_fixture.py [OUT_DIR]
"""

import datetime
import pathlib
import random
import sys

HEADER = "# Generated by tools/gen_isanum_fixture.py -- do not edit by hand.\n"
SYNTHETIC = (
    "# Area, topic, course and student names are SYNTHETIC placeholders; only\n"
    "# the structure and counts mirror the ISANUM program.\n"
)

BLOCKS = [
    (1, "Design and develop software solutions", [
        ("1.1", "Design software solutions meeting functional and non-functional requirements"),
        ("1.2", "Analyze complex problems and implement reliable algorithms"),
        ("1.3", "Apply software engineering methodologies and modeling frameworks"),
        ("1.4", "Develop solutions using appropriate programming paradigms"),
        ("1.5", "Conduct testing, validation and verification processes"),
    ]),
    (2, "Collect and process data, produce information", [
        ("2.1", "Design data structures and manage databases"),
        ("2.2", "Implement storage solutions for massive structured/unstructured data"),
        ("2.3", "Develop business intelligence and data warehouse solutions"),
        ("2.4", "Apply data mining and machine learning techniques"),
        ("2.5", "Develop knowledge representations and semantic web solutions"),
    ]),
    (3, "Design and develop IT infrastructures", [
        ("3.1", "Design IoT infrastructures with sensors and effectors"),
        ("3.2", "Configure network architectures for distributed systems"),
        ("3.3", "Program drivers and operating system components"),
        ("3.4", "Configure deployment environments for mobile and web applications"),
        ("3.5", "Develop cloud virtualization solutions"),
    ]),
    (4, "Design intelligent cyber-physical systems", [
        ("4.1", "Develop structural models for distributed CPS"),
        ("4.2", "Develop behavioral models for distributed CPS"),
        ("4.3", "Apply pattern-based design methodologies"),
        ("4.4", "Develop self-adaptive intelligent CPS"),
        ("4.5", "Integrate non-functional properties (safety, performance, energy)"),
    ]),
    (5, "Conduct multidisciplinary projects", [
        ("5.1", "Manage multidisciplinary research and innovation IT projects"),
        ("5.2", "Apply scientific methods to analyze complex systems"),
        ("5.3", "Lead international IT project teams with quality and ethics"),
    ]),
]

# (slug, title, block served, category). 34 areas.
AREAS = [
    ("sw-design", "Software Design", 1, "SW Development"),
    ("algorithms", "Algorithms and Complexity", 1, None),
    ("sw-process", "Software Process", 1, "SW Development"),
    ("prog-languages", "Programming Languages", 1, "SW Development"),
    ("sw-verification", "Software Verification and Validation", 1, "SW Development"),
    ("sw-modeling", "Software Modeling", 1, "SW Development"),
    ("hci", "Human-Computer Interaction", 1, None),
    ("data-management", "Data Management", 2, "Data"),
    ("storage-systems", "Storage Systems", 2, "Data"),
    ("business-intel", "Business Intelligence", 2, "Data"),
    ("machine-learning", "Machine Learning", 2, "Data"),
    ("knowledge-repr", "Knowledge Representation", 2, "Data"),
    ("statistics", "Statistics and Probability", 2, None),
    ("iot-systems", "IoT Systems", 3, "Infrastructure"),
    ("networking", "Networking", 3, "Infrastructure"),
    ("operating-systems", "Operating Systems", 3, "Infrastructure"),
    ("web-mobile", "Web and Mobile Platforms", 3, "Infrastructure"),
    ("cloud-computing", "Cloud Computing", 3, "Infrastructure"),
    ("parallel-computing", "Parallel and Distributed Computing", 3, None),
    ("security", "Security", 3, None),
    ("cps-modeling", "CPS Modeling", 4, "Cyber-Physical Systems"),
    ("embedded-systems", "Embedded Systems", 4, "Cyber-Physical Systems"),
    ("design-patterns", "Design Patterns", 4, None),
    ("autonomic-systems", "Autonomic Systems", 4, "Cyber-Physical Systems"),
    ("real-time-systems", "Real-Time Systems", 4, "Cyber-Physical Systems"),
    ("formal-methods", "Formal Methods", 4, None),
    ("signal-processing", "Signal Processing", 4, None),
    ("project-mgmt", "Project Management", 5, "Professional Practice"),
    ("research-methods", "Research Methods", 5, "Professional Practice"),
    ("ethics", "Social Issues and Professional Ethics", 5, "Professional Practice"),
    ("quality-mgmt", "Quality Management", 5, "Professional Practice"),
    ("teamwork", "Team Organization", 5, "Professional Practice"),
    ("communication", "Technical Communication", 5, "Professional Practice"),
    ("innovation", "Innovation and Entrepreneurship", 5, "Professional Practice"),
]
assert len(AREAS) == 34

SKILLS = [
    ("analytical-thinking", "Analytical and critical thinking"),
    ("problem-solving", "Problem solving"),
    ("collaboration", "Collaboration and teamwork"),
    ("oral-communication", "Oral communication and presentation"),
    ("written-communication", "Written communication"),
    ("ethical-reasoning", "Ethical and intercultural reasoning"),
    ("information-literacy", "Information literacy"),
    ("leadership", "Leadership"),
    ("project-organization", "Project organization"),
    ("quantitative-reasoning", "Quantitative reasoning"),
    ("time-management", "Time management"),
    ("continuous-learning", "Continuous learning"),
    ("negotiation", "Negotiation"),
]
DISPOSITIONS = [
    ("adaptable", "Adaptable"),
    ("collaborative", "Collaborative"),
    ("inventive", "Inventive"),
    ("meticulous", "Meticulous"),
    ("passionate", "Passionate"),
    ("proactive", "Proactive"),
    ("professional", "Professional"),
    ("purpose-driven", "Purpose-driven"),
    ("responsible", "Responsible"),
    ("responsive", "Responsive"),
    ("self-directed", "Self-directed"),
]
assert len(SKILLS) == 13 and len(DISPOSITIONS) == 11

# Deliberate gaps: no outcome exercises these, so competencies requiring them
# report SKILL_MISSING / DISPOSITION_MISSING.
NEVER_EXERCISED_SKILL = "negotiation"
NEVER_EXERCISED_DISPOSITION = "inventive"

LEVELS = ["A1", "A2", "B1", "B2", "C1", "C2"]

# Three courses per block; the area list of each block is dealt round-robin.
COURSES = {
    1: [("course-sw", "Software Design", 1), ("course-algo", "Algorithms and Programming", 1),
        ("course-se", "Software Engineering Practice", 2)],
    2: [("course-db", "Databases", 1), ("course-bigdata", "Big Data Platforms", 3),
        ("course-ml", "Machine Learning and Knowledge Engineering", 4)],
    3: [("course-net", "Networks and IoT", 2), ("course-os", "Operating Systems", 2),
        ("course-cloud", "Cloud and Web Deployment", 3)],
    4: [("course-cps", "Cyber-Physical System Modeling", 4), ("course-embedded", "Embedded and Real-Time Systems", 3),
        ("course-adaptive", "Self-Adaptive Systems", 5)],
    5: [("course-pm", "Project Management", 2), ("course-research", "Research Methods", 4),
        ("course-ethics", "Professional Ethics and Quality", 5)],
}


def quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def build():
    rng = random.Random(20240901)

    topics = {}  # area -> [qualified topic ids]
    for i, (slug, _, _, _) in enumerate(AREAS):
        count = 15 if i < 18 else 14
        names = [f"topic-{k:02d}" for k in range(1, count + 1)]
        if slug == "sw-design":
            names[0] = "arch-patterns"
        topics[slug] = [f"{slug}/{n}" for n in names]
    assert sum(len(v) for v in topics.values()) == 494

    # -- competencies -------------------------------------------------------
    competencies = []  # (id, block, statement, [(topic, level)], [skills], [dispositions])
    for block, _, comps in BLOCKS:
        areas = [a for a in AREAS if a[2] == block]
        for idx, (cid, statement) in enumerate(comps):
            primary = areas[idx % len(areas)][0]
            secondary = areas[(idx + 1) % len(areas)][0]
            picks = rng.sample(topics[primary], 3) + rng.sample(topics[secondary], 2)
            if cid == "1.1":
                picks[0] = "sw-design/arch-patterns"
            if cid == "4.3":
                picks[-1] = "sw-design/arch-patterns"
            low, high = (1, 3) if block == 5 else (2, 4)
            reqs = []
            for t in dict.fromkeys(picks):
                level = LEVELS[rng.randint(low, high)]
                if cid == "1.1" and t == "sw-design/arch-patterns":
                    level = "B2"
                if cid == "4.3" and t == "sw-design/arch-patterns":
                    level = "C1"
                reqs.append((t, level))
            skills = sorted(rng.sample([s for s, _ in SKILLS], 2))
            dispositions = sorted(rng.sample([d for d, _ in DISPOSITIONS], 1))
            if cid == "5.3":
                skills = sorted(set(skills) | {"leadership", NEVER_EXERCISED_SKILL})
            if cid == "4.4":
                dispositions = sorted(set(dispositions) | {NEVER_EXERCISED_DISPOSITION})
            competencies.append((cid, block, statement, reqs, skills, dispositions))

    # -- teaching plan ------------------------------------------------------
    required = {}  # topic -> max required level rank
    for c in competencies:
        for t, lvl in c[3]:
            required[t] = max(required.get(t, 0), LEVELS.index(lvl))

    area_block = {a[0]: a[2] for a in AREAS}
    area_course = {}
    for block in COURSES:
        block_areas = [a[0] for a in AREAS if a[2] == block]
        for i, a in enumerate(block_areas):
            area_course[a] = COURSES[block][i % 3][0]
    area_course["sw-design"] = "course-sw"

    # Exactly one topic requirement per competency is left unsatisfied,
    # alternating between untaught and under-level teaching. Every block
    # then has the same mean coverage, so no pathway is underserved until
    # the fixture is edited.
    required_by = {}
    for c in competencies:
        for t, _ in c[3]:
            required_by.setdefault(t, []).append(c[0])
    gap_kind = {}  # topic -> "untaught" | "under"
    for n, c in enumerate(competencies):
        candidates = [t for t, _ in c[3][1:] if len(required_by[t]) == 1]
        gap_kind[rng.choice(candidates)] = "untaught" if n % 2 == 0 else "under"

    offers = {}  # course -> [(topic, level)]
    for t in sorted(required):
        rank = required[t]
        course = area_course[t.split("/")[0]]
        kind = gap_kind.get(t)
        if kind == "untaught":
            continue
        if kind == "under":
            level = LEVELS[rank - 1]
        else:
            level = LEVELS[min(5, rank + rng.randint(0, 1))]
        offers.setdefault(course, []).append((t, level))
        # A second, shallower offer from a sibling course of the same block.
        if rng.random() < 0.2:
            siblings = [c for c, _, _ in COURSES[area_block[t.split("/")[0]]] if c != course]
            offers.setdefault(rng.choice(siblings), []).append((t, LEVELS[max(0, rank - 2)]))

    skill_pool = [s for s, _ in SKILLS if s != NEVER_EXERCISED_SKILL]
    disposition_pool = [d for d, _ in DISPOSITIONS if d != NEVER_EXERCISED_DISPOSITION]
    courses = []  # (id, title, year, ects, [(outcome id, statement, targets, skills, dispositions)])
    for block in sorted(COURSES):
        for cid, title, year in COURSES[block]:
            targets = sorted(offers.get(cid, []))
            outcomes = []
            for k in range(0, len(targets), 4):
                chunk = targets[k:k + 4]
                n = len(outcomes) + 1
                outcomes.append((f"lo{n}", f"{title}: learning outcome {n}", chunk,
                                 sorted(rng.sample(skill_pool, 2)), sorted(rng.sample(disposition_pool, 1))))
            courses.append((cid, title, year, rng.choice([3.0, 4.0, 5.0, 6.0]), outcomes))
    assert all(c[4] for c in courses), "every course needs an outcome"
    return topics, competencies, courses


def write_catalog(out, topics):
    lines = [HEADER, SYNTHETIC, "\n",
             'meta "program" "ISANUM (synthetic fixture)"\n',
             'meta "source" "synthetic; counts only"\n\n',
             'catalog "CC2020-shaped synthetic catalog" version "1" {\n']
    for slug, title, _, category in AREAS:
        head = f"  area {slug} {quote(title + ' (synthetic)')}"
        if category:
            head += f" category {quote(category)}"
        lines.append(head + " {\n")
        for t in topics[slug]:
            short = t.split("/", 1)[1]
            lines.append(f"    topic {short} {quote('Synthetic ' + title + ' topic ' + short)}\n")
        lines.append("  }\n")
    for sid, title in SKILLS:
        lines.append(f"  skill {sid} {quote(title)}\n")
    for did, title in DISPOSITIONS:
        lines.append(f"  disposition {did} {quote(title)}\n")
    lines.append("}\n")
    (out / "catalog.cdsl").write_text("".join(lines))


def write_competencies(out, competencies):
    lines = [HEADER, "\n"]
    for block, title, _ in BLOCKS:
        lines.append(f"block {block} {quote(title)} {{\n")
        for cid, b, statement, reqs, skills, dispositions in competencies:
            if b != block:
                continue
            lines.append(f"  competency {quote(cid)} {quote(statement)} {{\n")
            for t, lvl in reqs:
                lines.append(f"    requires {t} @ {lvl}\n")
            for s in skills:
                lines.append(f"    skill {s}\n")
            for d in dispositions:
                lines.append(f"    disposition {d}\n")
            lines.append("  }\n")
        lines.append("}\n\n")
    (out / "competencies.cdsl").write_text("".join(lines).rstrip("\n") + "\n")


def write_courses(out, courses):
    lines = [HEADER, SYNTHETIC, "\n"]
    for cid, title, year, ects, outcomes in courses:
        lines.append(f"course {cid} {quote(title)} {{\n  year {year}\n  ects {ects:g}\n")
        for oid, statement, targets, skills, dispositions in outcomes:
            lines.append(f"  outcome {oid} {quote(statement)} {{\n")
            for t, lvl in targets:
                lines.append(f"    targets {t} @ {lvl}\n")
            for s in skills:
                lines.append(f"    skill {s}\n")
            for d in dispositions:
                lines.append(f"    disposition {d}\n")
            lines.append("  }\n")
        lines.append(f"  path {cid}-path\n}}\n\n")
    (out / "courses.cdsl").write_text("".join(lines).rstrip("\n") + "\n")

    lines = [HEADER, "\n"]
    for cid, title, _, _, outcomes in courses:
        refs = [f"{cid}/{o[0]}" for o in outcomes]
        lines.append(f"object {cid}-lecture {quote(title + ' lecture notes')} {{\n"
                     f"  content {quote('synthetic://' + cid + '/lecture')}\n"
                     f"  assessment diagnostic {cid}-quiz {{\n    outcome {refs[0]}\n  }}\n"
                     f"  assessment formative {cid}-exercises {{\n")
        for r in refs:
            lines.append(f"    outcome {r}\n")
        lines.append("  }\n}\n\n")
        lines.append(f"object {cid}-project {quote(title + ' project')} {{\n"
                     f"  content {quote('synthetic://' + cid + '/project')}\n"
                     f"  assessment summative {cid}-defense {{\n")
        for r in refs:
            lines.append(f"    outcome {r}\n")
        lines.append("  }\n}\n\n")
        lines.append(f"path {cid}-path {{\n  stage {{ {cid}-lecture }}\n  stage {{ {cid}-project }}\n}}\n\n")
    (out / "objects.cdsl").write_text("".join(lines).rstrip("\n") + "\n")


def write_pathways(out):
    text = (HEADER + "\n"
            'pathway se "Software Engineering" {\n  emphasizes 1, 5\n}\n\n'
            'pathway data "Data Engineering" {\n  emphasizes 2, 3\n}\n\n'
            'pathway it "Information Technology" {\n  emphasizes 3, 4\n}\n')
    (out / "pathways.cdsl").write_text(text)


def write_portfolio(out, competencies, courses):
    """23 students, 931 pages, 7805 linked specs, 3747 revisions."""
    rng = random.Random(931)
    students = [f"student-{i:02d}" for i in range(1, 24)]
    pages = [41 if i < 11 else 40 for i in range(23)]
    assert sum(pages) == 931
    total = sum(pages)
    nine_links = set(rng.sample(range(total), 357))     # 357*9 + 574*8 = 7805
    five_revisions = set(rng.sample(range(total), 23))  # 23*5 + 908*4 = 3747

    comp_ids = [c[0] for c in competencies]
    outcome_refs = [f"{c[0]}/{o[0]}" for c in courses for o in c[4]]
    start = datetime.date(2024, 9, 2)
    span_days = (datetime.date(2025, 9, 30) - start).days

    lines = [HEADER, SYNTHETIC, "\n"]
    page = 0
    for student, count in zip(students, pages):
        lines.append(f"portfolio {student} {{\n")
        for k in range(1, count + 1):
            n_links = 9 if page in nine_links else 8
            revisions = 5 if page in five_revisions else 4
            created = start + datetime.timedelta(days=rng.randint(0, span_days))
            n_comp = rng.randint(2, 4)
            links = [("competency", c) for c in rng.sample(comp_ids, n_comp)]
            links += [("outcome", o) for o in rng.sample(outcome_refs, n_links - n_comp)]
            lines.append(f"  achievement page-{k:03d} {quote(f'Achievement page {k} of {student}')} {{\n"
                         f"    created {quote(created.isoformat())}\n    revisions {revisions}\n")
            for kind, ref in links:
                level = LEVELS[rng.randint(1, 4)]
                shown = quote(ref) if kind == "competency" else ref
                lines.append(f"    links {kind} {shown} @ {level}\n")
            lines.append("  }\n")
            page += 1
        lines.append("}\n\n")
    (out / "portfolio.cdsl").write_text("".join(lines).rstrip("\n") + "\n")


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else
                       pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "isanum")
    out.mkdir(parents=True, exist_ok=True)
    topics, competencies, courses = build()
    write_catalog(out, topics)
    write_competencies(out, competencies)
    write_courses(out, courses)
    write_pathways(out)
    write_portfolio(out, competencies, courses)


if __name__ == "__main__":
    main()
