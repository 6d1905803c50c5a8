"""Formula hierarchy analysis, translations, and witness transforms.

Thin re-export of the compiled core. Formulas are passed as strings in
the surface syntax (`forall x. q(x) -> exists y. q(y)`); structured
results come back as plain dicts and tuples.
"""

from ._core import (
    DomainError,
    FormulaSyntaxError,
    __version__,
    alt_paths,
    b_decompose,
    check_equiv,
    classify,
    default_seed,
    degree,
    dner_instance,
    e_neg_witness_epi,
    e_witness_esigma,
    enumerate_all,
    enumeration_counts,
    epi_conjunction,
    epi_repair,
    esigma_combine,
    free_vars,
    from_json,
    in_class,
    is_prenex,
    pad_to,
    prenex_classical,
    prenex_in_class,
    prenex_word,
    render_canonical,
    run_suite,
    scheme_instance,
    simplify_or_bot,
    suite_names,
    to_json,
    translate,
    u_neg_witness_esigma,
    u_witness_epi,
    witness_sigma,
)

__all__ = [
    "DomainError",
    "FormulaSyntaxError",
    "__version__",
    "alt_paths",
    "b_decompose",
    "check_equiv",
    "classify",
    "default_seed",
    "degree",
    "dner_instance",
    "e_neg_witness_epi",
    "e_witness_esigma",
    "enumerate_all",
    "enumeration_counts",
    "epi_conjunction",
    "epi_repair",
    "esigma_combine",
    "free_vars",
    "from_json",
    "in_class",
    "is_prenex",
    "pad_to",
    "prenex_classical",
    "prenex_in_class",
    "prenex_word",
    "render_canonical",
    "run_suite",
    "scheme_instance",
    "simplify_or_bot",
    "suite_names",
    "to_json",
    "translate",
    "u_neg_witness_esigma",
    "u_witness_epi",
    "witness_sigma",
]
