"""Girth, abelian girth and their certificates for finite multigraphs."""

from .abelian import (
    AblResult,
    SubgraphWitness,
    WalkWitness,
    abelian_girth,
    abl_oracle,
    dumbbell_bound,
    has_finite_abelian_girth,
    shortest_theta_bound,
    structural_bound,
)
from .generators import (
    complete,
    cycle,
    enumerate_small,
    make_barbell,
    make_figure_eight,
    make_theta,
    petersen,
    random_regular,
)
from .girth import GirthResult, enumerate_nb_walks, girth, nb_distance_table
from .graph import (
    Multigraph,
    abelian_length,
    classify_chi_minus_one,
    connected_components,
    euler_characteristic,
    read_edge_list,
    two_core,
    write_edge_list,
)
from .lps import (
    build_lps,
    certify_lps_abl,
    goodness_witnesses,
    is_good,
    legendre,
    quaternion_generators,
    r0,
    sqrt_minus_one,
)
from .moore import MooreCertificate, certify_abl_upper, moore_h, scholium_certify
from .walks import Walk, commutator, net_counts, reduce, triple_word

__version__ = "0.1.0"
