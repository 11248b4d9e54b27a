"""Dense tricluster mining and visual exploration for triadic incidence data.

A triadic context records which (object, attribute, condition) triples are
incident, e.g. which user tagged which resource with which tag. This
package mines prime-operator triclusters (dense boxes seeded by single
triples), enumerates exact dyadic and triadic concepts on small contexts
for cross-checking, computes tag/resource recommendations, and aggregates
coverage heatmaps. Everything density-valued is exact rational arithmetic.

Entry points: :func:`enumerate_triclusters` for mining,
:mod:`triscope.cli` for the command line, :func:`create_app` for the HTTP
workbench backend.
"""

from .analytics import (
    CoverageMap,
    coverage_identity,
    coverage_map,
    largest_tricluster,
    order_by_density,
    triclusters_containing,
)
from .core import (
    Axis,
    DyadicContext,
    FormalConcept,
    OABicluster,
    TriadicContext,
    Tricluster,
    Triconcept,
)
from .errors import (
    CapExceededError,
    EmptySetError,
    EmptyStoreError,
    GenerationCapError,
    InvalidAxisError,
    MalformedLineError,
    NotIncidentError,
    TriscopeError,
    UnknownIdError,
    UnknownLabelError,
)
from .ingest import (
    GeneratorSpec,
    canonicalize,
    context_document,
    context_from_document,
    context_to_tsv,
    document_bytes,
    generate_context,
    load_document,
    parse_rho,
    parse_triples,
    results_document,
    rho_token,
    write_results,
)
from .mining import (
    ClusteringConfig,
    TriclusterStore,
    canonical_form,
    canonical_key,
    enumerate_triclusters,
)
from .oracle import enumerate_formal_concepts, enumerate_triconcepts, is_triconcept
from .recommend import (
    Recommendation,
    UserProfile,
    recommend,
    recommend_all,
    similarity,
    user_profile,
)
from .service import create_app

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "CapExceededError",
    "ClusteringConfig",
    "CoverageMap",
    "DyadicContext",
    "EmptySetError",
    "EmptyStoreError",
    "FormalConcept",
    "GenerationCapError",
    "GeneratorSpec",
    "InvalidAxisError",
    "MalformedLineError",
    "NotIncidentError",
    "OABicluster",
    "Recommendation",
    "TriadicContext",
    "Tricluster",
    "TriclusterStore",
    "Triconcept",
    "TriscopeError",
    "UnknownIdError",
    "UnknownLabelError",
    "UserProfile",
    "canonical_form",
    "canonical_key",
    "canonicalize",
    "context_document",
    "context_from_document",
    "context_to_tsv",
    "coverage_identity",
    "coverage_map",
    "create_app",
    "document_bytes",
    "enumerate_formal_concepts",
    "enumerate_triclusters",
    "enumerate_triconcepts",
    "generate_context",
    "is_triconcept",
    "largest_tricluster",
    "load_document",
    "order_by_density",
    "parse_rho",
    "parse_triples",
    "recommend",
    "recommend_all",
    "results_document",
    "rho_token",
    "similarity",
    "triclusters_containing",
    "user_profile",
    "write_results",
]
