"""Regenerate crates/core/corpus/named.g6 from Sage's named-graph generators.

Requires a Sage installation (passagemath-graphs is enough):

    python scripts/export_corpus.py > crates/core/corpus/named.g6
"""
import sys

from sage.all__sagemath_graphs import graphs

# (table name, generator)
NAMED = [
    ("Balaban 10-cage", graphs.Balaban10Cage),
    ("Bidiakis cube", graphs.BidiakisCube),
    ("Biggs-Smith graph", graphs.BiggsSmithGraph),
    ("Blanusa First Snark Graph", graphs.BlanusaFirstSnarkGraph),
    ("Blanusa Second Snark Graph", graphs.BlanusaSecondSnarkGraph),
    ("Brinkmann graph", graphs.BrinkmannGraph),
    ("Brouwer-Haemers", graphs.BrouwerHaemersGraph),
    ("Bucky Ball", graphs.BuckyBall),
    ("Clebsch graph", graphs.ClebschGraph),
    ("Coclique graph of Hoffmann-Singleton graph", graphs.cocliques_HoffmannSingleton),
    ("Conway-Smith graph for 3S7", graphs.ConwaySmith_for_3S7),
    ("Coxeter Graph", graphs.CoxeterGraph),
    ("Desargues Graph", graphs.DesarguesGraph),
    ("Dodecahedron", graphs.DodecahedralGraph),
    ("Double star snark", graphs.DoubleStarSnark),
    ("Durer graph", graphs.DurerGraph),
    ("Dyck graph", graphs.DyckGraph),
    ("Ellingham-Horton 54-graph", graphs.EllinghamHorton54Graph),
    ("Ellingham-Horton 78-graph", graphs.EllinghamHorton78Graph),
    ("F26A Graph", graphs.F26AGraph),
    ("Flower Snark", graphs.FlowerSnark),
    ("Folkman Graph", graphs.FolkmanGraph),
    ("Foster Graph", graphs.FosterGraph),
    ("Foster graph for 3.Sym(6) graph", graphs.FosterGraph3S6),
    ("Franklin graph", graphs.FranklinGraph),
    ("Frucht graph", graphs.FruchtGraph),
    ("Gosset Graph", graphs.GossetGraph),
    ("Gray graph", graphs.GrayGraph),
    ("Gritsenko strongly regular graph", graphs.GritsenkoGraph),
    ("Hall-Janko graph", graphs.HallJankoGraph),
    ("Harborth Graph", graphs.HarborthGraph),
    ("Harries Graph", graphs.HarriesGraph),
    ("Harries-Wong graph", graphs.HarriesWongGraph),
    ("Heawood graph", graphs.HeawoodGraph),
    ("Hexahedron", graphs.HexahedralGraph),
    ("Higman-Sims graph", graphs.HigmanSimsGraph),
    ("Hoffman Graph", graphs.HoffmanGraph),
    ("Hoffman-Singleton graph", graphs.HoffmanSingletonGraph),
    ("Holt graph", graphs.HoltGraph),
    ("Horton Graph", graphs.HortonGraph),
    ("Icosahedron", graphs.IcosahedralGraph),
    ("Klein 3-regular Graph", graphs.Klein3RegularGraph),
    ("Klein 7-regular Graph", graphs.Klein7RegularGraph),
    ("M22 Graph", graphs.M22Graph),
    ("Markstroem Graph", graphs.MarkstroemGraph),
    ("McGee graph", graphs.McGeeGraph),
    ("Meredith Graph", graphs.MeredithGraph),
    ("Moebius-Kantor Graph", graphs.MoebiusKantorGraph),
    ("Nauru Graph", graphs.NauruGraph),
    ("Octahedron", graphs.OctahedralGraph),
    ("Pappus Graph", graphs.PappusGraph),
    ("Perkel Graph", graphs.PerkelGraph),
    ("Petersen graph", graphs.PetersenGraph),
    ("Robertson Graph", graphs.RobertsonGraph),
    ("Schlaefli graph", graphs.SchlaefliGraph),
    ("Shrikhande graph", graphs.ShrikhandeGraph),
    ("Sims-Gewirtz Graph", graphs.SimsGewirtzGraph),
    ("Sylvester Graph", graphs.SylvesterGraph),
    ("Szekeres Snark Graph", graphs.SzekeresSnarkGraph),
    ("Tetrahedron", graphs.TetrahedralGraph),
    ("Thomsen graph", graphs.ThomsenGraph),
    ("Tietze Graph", graphs.TietzeGraph),
    ("Tricorn Graph", graphs.TricornGraph),
    ("Tutte 12-Cage", graphs.Tutte12Cage),
    ("Tutte-Coxeter graph", graphs.TutteCoxeterGraph),
    ("Twinplex Graph", graphs.TwinplexGraph),
    ("Wells graph", graphs.WellsGraph),
]

print("# Named graphs used by the appendix-table regressions.")
print("# One '# name' line followed by the graph6 string.")
for name, gen in NAMED:
    try:
        g = gen()
    except Exception as exc:  # generator needs an optional Sage component
        print("skipped %s: %s" % (name, exc), file=sys.stderr)
        continue
    print("# " + name)
    print(g.graph6_string())
