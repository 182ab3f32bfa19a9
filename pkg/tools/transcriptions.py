"""Coordinates of the curated K4 drawings Omega_1 .. Omega_10.

Omega_1 and Omega_2 are written directly as codes.  The others are given as
vertex positions, edge centre lines (with gaps bridged) and the inked
pieces; ``geometry.build`` reads crossings and rotations off them.
Crossing slots are counterclockwise with the understrand on slots 0 and 2.
"""

from __future__ import annotations

import geometry as G

CODES = {}

# planar K4: centre C (50,50), UL (29,63), UR (71,63), B (50,25), outer circle
CODES["omega1"] = (
    {"C": ["a2", "a1", "a3"], "UL": ["a6", "a5", "a1"], "UR": ["a6", "a2", "a4"], "B": ["a4", "a3", "a5"]},
    {"a1": ("C", "UL", []), "a2": ("C", "UR", []), "a3": ("C", "B", []),
     "a4": ("UR", "B", []), "a5": ("B", "UL", []), "a6": ("UL", "UR", [])},
)

# square BL (25,35), TL (25,65), TR (75,65), BR (75,35) whose two diagonals
# twist three times: crossings L (30,50), C (50,50), R (70,50), each with
# slots SE, NE, NW, SW
CODES["omega2"] = (
    {"BL": ["a2", "a1", "a3"], "TL": ["a6", "a1", "a5"], "TR": ["a4", "a6", "a2"], "BR": ["a4", "a5", "a3"]},
    {"a1": ("BL", "TL", []), "a2": ("BL", "TR", [("L", 3), ("C", 2), ("R", 3)]), "a3": ("BL", "BR", []),
     "a4": ("TR", "BR", []), "a5": ("BR", "TL", [("R", 0), ("C", 1), ("L", 0)]), "a6": ("TL", "TR", [])},
)

# --- trefoil-based drawings (Omega_3, Omega_4, Omega_5) ---------------------
T1 = [(60.62, 48.40), (55.16, 46.94), (50.20, 46.34), (45.73, 46.61), (40.40, 47.38), (35.57, 49.01),
      (30.74, 50.64), (26.91, 54.01), (23.58, 58.24), (22.48, 62.34), (21.52, 68.67), (23.15, 73.50),
      (26.52, 77.33), (32.48, 79.66), (36.58, 80.76), (41.91, 79.99), (46.74, 78.36)]
T2 = [(36.38, 53.60), (37.84, 59.06), (39.80, 63.66), (42.27, 67.39), (45.60, 71.62), (49.43, 74.99),
      (53.26, 78.36), (58.09, 79.99), (63.42, 80.76), (67.51, 79.66), (73.48, 77.33), (76.84, 73.50),
      (78.48, 68.67), (77.52, 62.34), (76.42, 58.24), (73.09, 54.01), (69.26, 50.65)]
T3 = [(53, 72), (57, 68), (60, 64), (62, 60), (64, 55), (65, 50), (66, 45), (65, 40), (63, 35), (60, 32),
      (55, 28), (50, 27), (45, 28), (40, 32), (37, 35), (35, 40), (34, 45)]


def _between(seq, a, b):
    """Points of seq strictly between the points a and b."""
    return seq[seq.index(a) + 1:seq.index(b)]


def _omega3():
    V = {"C": (50, 58), "U": (60, 64), "W": (40, 64), "Z": (50, 47)}
    geo = {
        ("C", "U"): [], ("C", "W"): [], ("C", "Z"): [],
        ("Z", "U"): T1[3:] + [(53, 72), (57, 68)],
        ("U", "W"): T3[3:] + T2[:2],
        ("W", "Z"): T2[3:] + T1[:2],
    }
    ink = [T1, T2, T3, [(50, 58), (60, 64)], [(50, 58), (40, 64)], [(50, 58), (50, 47)]]
    return V, G.k4_edges(G.k4_labels("C", "U", "W", "Z"), geo), ink


def _omega4():
    V = {"C": (50, 38), "R": (58, 48), "L": (42, 48), "Z": (50, 28)}
    geo = {
        ("C", "R"): [], ("C", "L"): [], ("C", "Z"): [],
        ("R", "L"): T1[1:4],
        ("L", "Z"): T1[4:] + T3[:10],
        ("Z", "R"): T3[12:] + T2 + T1[:1],
    }
    ink = [T1, T2, T3, [(50, 38), (58, 48)], [(50, 38), (42, 48)], [(50, 38), (50, 28)]]
    return V, G.k4_edges(G.k4_labels("C", "R", "L", "Z"), geo), ink


def _omega5():
    V = {"C": (50, 38), "E": (64, 38), "W": (36, 38), "Z": (50, 28)}
    geo = {
        ("C", "E"): [], ("C", "W"): [], ("C", "Z"): [],
        ("E", "Z"): T3[8:11],
        ("Z", "W"): T3[12:15],
        ("W", "E"): T3[15:] + T2 + T1 + T3[:8],
    }
    ink = [T1, T2, T3, [(50, 38), (36, 38)], [(50, 38), (64, 38)], [(50, 38), (50, 28)]]
    return V, G.k4_edges(G.k4_labels("C", "E", "W", "Z"), geo), ink


# --- Omega_6 -----------------------------------------------------------------
P1 = [(42, 52), (46, 56), (48, 57), (50, 57), (52, 57), (54, 56), (58, 52), (60, 50), (60, 46), (58, 40),
      (56, 35), (53, 32)]
P2 = [(58, 48), (54, 44), (52, 43), (50, 43), (48, 43), (46, 44), (42, 48), (40, 50), (40, 54), (42, 60),
      (44, 65), (47, 68)]
P3 = [(40, 46), (42, 40), (44, 35), (47, 32), (50, 30), (53, 28), (58, 26), (62, 26), (67, 28), (73, 32),
      (76, 35), (78, 40), (80, 46), (80, 50), (80, 54), (78, 60), (76, 65), (73, 68), (67, 72), (62, 74),
      (58, 74), (53, 72)]
P4 = [(60, 54), (58, 60), (56, 65), (53, 68), (50, 70), (47, 72), (42, 74), (38, 74), (33, 72), (27, 68),
      (24, 65), (22, 60), (20, 54), (20, 50), (20, 46), (22, 40), (24, 35), (27, 32), (33, 28), (38, 26),
      (42, 26), (47, 28)]


def _omega6():
    V = {"V1": (24, 65), "V2": (56, 65), "V3": (44, 65), "V4": (76, 65)}
    p4r = P4[::-1]
    p3r = P3[::-1]
    geo = {
        ("V1", "V2"): _between(p4r, (24, 65), (56, 65)),
        ("V2", "V3"): p4r[p4r.index((56, 65)) + 1:] + P2[:P2.index((44, 65))],
        ("V3", "V4"): P2[P2.index((44, 65)) + 1:] + p3r[:p3r.index((76, 65))],
        ("V4", "V1"): p3r[p3r.index((76, 65)) + 1:] + P1 + p4r[:p4r.index((24, 65))],
        ("V1", "V3"): [], ("V2", "V4"): [],
    }
    ink = [P1, P2, P3, P4, [(24, 65), (44, 65)], [(56, 65), (76, 65)]]
    return V, G.k4_edges(G.k4_labels("V1", "V2", "V3", "V4"), geo), ink


# --- the four-crossing family (Omega_7 .. Omega_10) ----------------------------
ALPHA = [(52, 80), (57, 75), (57, 70), (52, 62)]
BETA = [(48, 58), (44, 55), (40, 53), (37, 50), (36, 48), (35, 44)]
GAMMA = [(48, 80), (43, 75), (43, 70), (48, 62), (50, 60), (52, 58), (56, 55), (60, 53), (63, 50), (64, 48)]
DELTA = [(52, 80), (48, 83)]
EPS = [(52, 83), (55, 85), (60, 85), (67, 83), (70, 79), (72, 76), (74, 70), (72, 60), (70, 55), (68, 50),
       (66, 47), (62, 45), (57, 43), (53, 42), (50, 42), (47, 42), (43, 43), (38, 45)]
ZETA = [(48, 83), (45, 85), (40, 85), (33, 83), (30, 79), (28, 76), (26, 70), (28, 60), (30, 55), (32, 50),
        (34, 48)]
BOTTOM = [(65, 44), (65, 40), (64, 35), (60, 29), (53, 27), (50, 27), (47, 27), (40, 29), (36, 35), (35, 40),
          (35, 44)]
TOP_INK = [ALPHA, BETA, GAMMA, DELTA, EPS, ZETA]


def _omega7():
    V = {"Q": (57, 72), "P": (43, 72), "M": (50, 42), "B": (50, 27)}
    E = {
        "a1": ("Q", "P", []),
        "a2": ("Q", "M", [(57, 75), (52, 80), (48, 83)] + ZETA[1:] + [(38, 45), (43, 43), (47, 42)]),
        "a3": ("Q", "B", [(57, 70), (52, 62)] + BETA + [(35, 40), (36, 35), (40, 29), (47, 27)]),
        "a4": ("M", "B", []),
        "a5": ("B", "P", [(53, 27), (60, 29), (64, 35), (65, 40), (65, 44)] + GAMMA[::-1][:-2]),
        "a6": ("P", "M", [(43, 75), (48, 80)] + EPS[:14]),
    }
    ink = TOP_INK + [BOTTOM, [(43, 72), (57, 72)], [(50, 27), (50, 42)]]
    return V, E, ink


def _omega8():
    V = {"X": (50, 30), "Y": (50, 22), "L": (31, 52), "R": (69, 52)}
    bottom = [(65, 44), (65, 40), (64, 35), (60, 32), (53, 30), (50, 30), (47, 30), (40, 32), (36, 35), (35, 40),
              (35, 44)]
    eps_to_r = EPS[:EPS.index((70, 55)) + 1]
    geo = {
        ("X", "R"): [(53, 30), (60, 32), (64, 35), (65, 40), (65, 44)] + GAMMA[::-1] + eps_to_r,
        ("R", "L"): EPS[EPS.index((68, 50)):] + [(34, 48), (32, 50)],
        ("L", "X"): [(30, 55), (28, 60), (26, 70), (28, 76), (30, 79), (33, 83), (40, 85), (45, 85), (48, 83)]
        + ALPHA + BETA + [(35, 40), (36, 35), (40, 32), (47, 30)],
        ("Y", "X"): [],
        ("Y", "R"): [(66, 24), (69, 34)],
        ("Y", "L"): [(34, 24), (31, 34)],
    }
    ink = TOP_INK + [bottom, [(50, 22), (50, 30)],
                     [(69, 52), (69, 34), (66, 24), (50, 22), (34, 24), (31, 34), (31, 52)]]
    return V, G.k4_edges(G.k4_labels("Y", "X", "R", "L"), geo), ink


def _omega9():
    V = {"C": (50, 35), "B": (50, 27), "Rv": (57, 43), "Lv": (43, 43)}
    geo = {
        ("B", "Rv"): [(53, 27), (60, 29), (64, 35), (65, 40), (65, 44)] + GAMMA[::-1] + EPS[:EPS.index((57, 43))],
        ("Rv", "Lv"): [(53, 42), (50, 42), (47, 42)],
        ("Lv", "B"): [(38, 45), (34, 48), (32, 50), (30, 55), (28, 60), (26, 70), (28, 76), (30, 79), (33, 83),
                      (40, 85), (45, 85), (48, 83)] + ALPHA + BETA + [(35, 40), (36, 35), (40, 29), (47, 27)],
        ("C", "B"): [], ("C", "Rv"): [], ("C", "Lv"): [],
    }
    ink = TOP_INK + [BOTTOM, [(50, 35), (50, 27)], [(50, 35), (43, 43)], [(50, 35), (57, 43)]]
    return V, G.k4_edges(G.k4_labels("C", "B", "Rv", "Lv"), geo), ink


def _omega10():
    V = {"C": (50, 35), "B": (50, 27), "Rb": (64, 35), "Lb": (36, 35)}
    geo = {
        ("B", "Rb"): [(53, 27), (60, 29)],
        ("Rb", "Lb"): [(65, 40), (65, 44)] + GAMMA[::-1] + EPS + [(34, 48), (32, 50), (30, 55), (28, 60), (26, 70),
                                                                  (28, 76), (30, 79), (33, 83), (40, 85), (45, 85),
                                                                  (48, 83)] + ALPHA + BETA + [(35, 40)],
        ("Lb", "B"): [(40, 29), (47, 27)],
        ("C", "B"): [], ("C", "Rb"): [], ("C", "Lb"): [],
    }
    ink = TOP_INK + [BOTTOM, [(36, 35), (64, 35)], [(50, 27), (50, 35)]]
    return V, G.k4_edges(G.k4_labels("C", "B", "Rb", "Lb"), geo), ink


DRAWINGS = {
    "omega3": _omega3, "omega4": _omega4, "omega5": _omega5, "omega6": _omega6,
    "omega7": _omega7, "omega8": _omega8, "omega9": _omega9, "omega10": _omega10,
}


def codes() -> dict[str, tuple]:
    out = dict(CODES)
    for name, f in DRAWINGS.items():
        out[name] = G.build(*f())
    return out


# --- theta-curves ----------------------------------------------------------------

def curve(p0, out_deg, in_deg, p1, samples=16):
    """Points of a ``to[out=..., in=...]`` curve (cubic, looseness 1), endpoints excluded."""
    import math

    d = 0.3915 * math.dist(p0, p1)
    c0 = (p0[0] + d * math.cos(math.radians(out_deg)), p0[1] + d * math.sin(math.radians(out_deg)))
    c1 = (p1[0] + d * math.cos(math.radians(in_deg)), p1[1] + d * math.sin(math.radians(in_deg)))
    pts = []
    for i in range(1, samples):
        t = i / samples
        s = 1 - t
        pts.append(tuple(round(s ** 3 * a + 3 * s * s * t * b + 3 * s * t * t * c + t ** 3 * e, 4)
                         for a, b, c, e in zip(p0, c0, c1, p1)))
    return pts


def _chain(*segments):
    """Join ``(p0, out, in, p1)`` curves into one point list, shared ends kept once."""
    pts = [segments[0][0]]
    for p0, a, b, p1 in segments:
        pts += curve(p0, a, b, p1) + [p1]
    return pts


def _theta_tilde():
    v1, v2 = (50, 50), (50, 34)
    s1 = _chain(((50, 50), 0, 120, (60, 42)), ((60, 42), 300, 40, (52, 17)))
    s2 = _chain(((48, 14), 210, 0, (30, 10)), ((30, 10), 180, 270, (10, 42)), ((10, 42), 90, 180, (30, 70)),
                ((30, 70), 0, 105, (61, 46)))
    s3 = _chain(((59, 39), 230, 0, (50, 34)))
    s4 = _chain(((50, 34), 180, 300, (39, 40)), ((39, 40), 120, 210, (48, 62)))
    s5 = _chain(((52, 64), 30, 180, (70, 70)), ((70, 70), 0, 90, (90, 42)), ((90, 42), 270, 0, (70, 10)),
                ((70, 10), 180, 260, (38, 38)))
    s6 = _chain(((40, 42), 60, 180, (50, 50)))
    V = {"v1": v1, "v2": v2}
    back = s4 + s5 + s6  # from v2 round to v1
    E = {
        "e1": ("v1", "v2", s1[1:] + s2 + s3[:-1]),
        "e2": ("v1", "v2", back[::-1][1:-1]),
        "e3": ("v1", "v2", []),
    }
    return V, E, [s1, s2, s3, s4, s5, s6, [v1, v2]]


def theta_codes() -> dict[str, tuple]:
    planar = ({"v1": ["e1", "e2", "e3"], "v2": ["e3", "e2", "e1"]},
              {"e1": ("v1", "v2", []), "e2": ("v1", "v2", []), "e3": ("v1", "v2", [])})
    return {"theta-planar": planar, "theta-tilde": G.build(*_theta_tilde())}
