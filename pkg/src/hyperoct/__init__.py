"""Exact-arithmetic hyperoctahedral descent operators on signed words, their
spectra and eigenvectors, and the induced riffle-shuffle Markov chains."""

from .errors import (
    BadIndices,
    EmptyWord,
    FlavorMismatch,
    FlavorUnsupported,
    HyperoctError,
    HypothesesNotMet,
    NotHomogeneous,
    NotInAlphabet,
    NotLyndon,
    OutsideBasis,
    SingleLetter,
    SizeMismatch,
    StateSpaceTooLarge,
)
from .words import (
    AlgebraElement,
    AlphabetSpec,
    SignedLetter,
    SignedWord,
    all_words,
    distinct_letter_words,
    letter_key,
    signed_permutations,
    word_lex_key,
)
from .algebra import (
    CONCAT,
    SHUFFLE,
    concat_elements,
    concat_product,
    coproduct_component,
    deconcatenate,
    deshuffle,
    is_primitive,
    lie_bracket,
    project_invariant,
    shuffle_product,
    tau,
    tau_tilde,
)
from .descent import (
    CompatibleMatrix,
    DecoratedComposition,
    Decoration,
    DescentOperator,
    apply_elementary,
    apply_operator,
    compatible_matrices,
    compose_law,
    compositions,
    decorated_compositions,
    operator_matrix,
    riffle_operator,
    wcomp,
    wcomp_tilde,
)
from .spectral import (
    beta,
    compatible_set_compositions,
    double_partitions,
    hyperoct_stirling,
    multiplicity_genfun,
    operator_eigenvalues,
    partitions,
    riffle_spectrum,
    shuffle_multiplicities,
    stirling_c,
)
from .lyndon import (
    ClassifiedPrimitives,
    build_eigenvector,
    classify_primitive,
    classify_word,
    eigenbasis,
    is_lyndon,
    lyndon_factorize,
    lyndon_words,
    primitive_dimensions,
    standard_factorization,
    stdbrac,
    symmetrized_product,
)
from .markov import (
    FLIP,
    ROTATION,
    ShuffleSpec,
    TransitionMatrix,
    batch_step,
    des,
    eigenfunction_value,
    expectation_via_eigenfunction,
    expected_descents,
    exact_stat_expectation,
    f_minus,
    f_plus,
    f_tilde,
    g_fn,
    sample_step,
    simulate,
    stationary_distribution,
    stationary_is_unique,
    subdominant_families,
    transition_matrix,
    verify_subdominant,
)

__version__ = "1.0.0"
