//! Vertex-deleted decks of small graphs and what they determine.
//!
//! Graphs have at most [`MAX_VERTICES`] vertices and are stored as bitset
//! adjacency rows. The `k`-deck of a graph is the multiset of isomorphism
//! classes of its `k`-vertex induced subgraphs, each class identified by a
//! [`CanonicalCode`].

pub mod canon;
pub mod deck;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod recognize;
pub mod vine;

pub use canon::{canonical_code, canonical_labeling, is_isomorphic, CanonicalCode};
pub use deck::{
    compute_deck, count_induced_from_deck, deck_equal, edge_count_from_deck, subdeck, Deck,
    DeckError,
};
pub use enumerate::{enumerate_graphs, enumerate_graphs_capped, EnumError, Filter, DEFAULT_CAP};
pub use graph::{Graph, GraphError, Length, Metrics, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, parse_graph6_stream, write_graph6, Graph6Error};
pub use recognize::{
    fallback_verdict, nydl_pair, recognize, recognize_with_cap, reconstruct_all,
    verify_recognizability, DecisionPath, RecognitionReport, RecognizeError,
    ReconstructionSearchResult, Verdict, VerifySummary,
};
pub use vine::{
    build_spider, count_k_centers_from_deck, count_k_central_edges_from_deck, count_long_paths,
    count_maximal_from_deck, degree_list_from_deck, is_k_evine, is_k_vine, k_centers,
    k_central_edges, short_card_stats, Family, MaximalCountTable, ShortCardStats, SpiderSpec,
    VineError,
};
