"""Path-independent (Plott) choice functions on finite sets."""
from .core import (
    CapacityError,
    ChoiceFunction,
    Comparison,
    GroundSet,
    NotLinearError,
    PlottError,
    SetMap,
    SimpleWord,
    ValidationError,
    all_words,
    compare,
    evaluate,
    is_path_independent,
    linear_from_word,
    path_independence_witness,
    support,
    word_from_linear,
    word_prefix_order,
)
from .lattice import (
    PartialOrder,
    WordSet,
    basement,
    enumerate_plott,
    identity_on,
    join,
    join_of_words,
    max_choice,
    meet,
    plottize,
    socle,
    top_k_choice,
)
from .functorial import (
    apply_correspondence,
    direct_image,
    direct_product,
    direct_sum,
    full_image,
    inverse_image,
    trivial_extension,
    word_image,
)
from .geometry import (
    ConvexFamily,
    canonical_rationalization,
    closure,
    extreme_points,
    from_geometry,
    is_convex_geometry,
    maximal_chains,
    pieces,
    rationalization_alpha,
    to_geometry,
    verify_ss_rationalization,
)
from .convexity import (
    convex_hull,
    geometry_from_convex_set,
    is_convex,
    melange,
    melange_family,
    segment,
    shuffle,
)

__version__ = "0.1.0"
