#ifndef DIGDOM_FAMILIES_HH
#define DIGDOM_FAMILIES_HH

#include <digdom/digraph.hh>
#include <digdom/products.hh>

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace digdom
{
    /// mt19937_64 with hand-rolled range mappings, so streams agree across standard libraries.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }
        /// Uniform in [0, bound), by rejection.
        auto below(std::uint64_t bound) -> std::uint64_t;
        /// Uniform in [0, 1) with 53 random bits.
        auto unit() -> double;

    private:
        std::mt19937_64 _engine;
    };

    enum class EdgeOrientation
    {
        forward,
        backward,
        both
    };

    auto gen_oriented_cycle(std::size_t n) -> Digraph;

    /// v1 is vertex 0 and v_j is vertex j - 1.
    auto gen_G_m(std::size_t m) -> Digraph;

    /**
     * m = 3k triangles a_i -> b_i -> c_i -> a_i plus d_1..d_m. Triangle i
     * (1-based) occupies vertices 3(i-1) .. 3(i-1)+2 and d_i is vertex
     * 3m + i - 1. Requires k >= 3.
     */
    auto gen_H_m(std::size_t k) -> Digraph;

    /// Orientation of the 4-cycle v0 v1 v2 v3 with the given circular out-degrees:
    /// "0211", "0121", "0202" or "1111". In "0202", u is v1 and v is v3.
    auto gen_C4_orientation(const std::string & variant) -> Digraph;
    inline constexpr Vertex c4_u = 1, c4_v = 3;

    auto gen_bidirected_path(std::size_t n) -> Digraph;

    /// Vertices a, b, c, x, c', b', a' in this order.
    auto gen_K1_star() -> Digraph;
    inline constexpr Vertex k1_star_x = 3;

    /// One copy of K1* per vertex of t, whose x is identified with that vertex.
    /// Copy i occupies vertices 7i .. 7i+6.
    auto gen_T_star(const Digraph & t) -> Digraph;

    /**
     * Corona of a tree. Base vertex i keeps index i and its pendant leaf is
     * n + i. Edge orientations follow tree.edges() order, forward meaning
     * from the lower to the higher index. Leaf modes are taken from the
     * leaf's point of view: forward means base -> leaf.
     */
    auto gen_corona_digraph(const UndirectedGraph & tree, const std::vector<EdgeOrientation> & edges,
        const std::vector<EdgeOrientation> & leaves) -> Digraph;

    /// The directed triangle a -> b -> c -> a.
    auto gen_fig1_G() -> Digraph;
    /// u -> v -> x -> y -> z -> u plus z -> x.
    auto gen_fig1_H() -> Digraph;
    /// Corona of the path u -> v -> w with leaves x, y, z; u <-> x, v -> y, w -> z.
    auto gen_fig5_D() -> Digraph;
    auto gen_arcless(std::size_t n) -> Digraph;

    /// Decodes a Prüfer sequence over [0, n) into the n - 1 tree edges.
    auto prufer_decode(std::size_t n, const std::vector<Vertex> & sequence) -> std::vector<Edge>;

    /// Uniform labelled tree by Prüfer decoding, each edge oriented i.i.d. by weight.
    auto random_ditree(std::size_t n, std::uint64_t seed, std::array<double, 3> weights = {1, 1, 1}) -> Digraph;
    auto random_ditree(std::size_t n, Rng & rng, std::array<double, 3> weights = {1, 1, 1}) -> Digraph;

    /// Each ordered pair is an arc with probability p.
    auto random_digraph(std::size_t n, double p, Rng & rng) -> Digraph;
    /// Random topological order, then each forward pair is an arc with probability p.
    auto random_dag(std::size_t n, double p, Rng & rng) -> Digraph;

    inline constexpr std::size_t ditree_enumeration_limit = 6;

    /// Every labelled tree on n vertices with every orientation of each edge,
    /// n^(n-2) * 3^(n-1) in all. Isomorphic copies are not removed.
    auto for_each_ditree(std::size_t n, const std::function<void(const Digraph &)> & f, bool allow_large = false) -> void;
    auto enumerate_ditrees(std::size_t n, bool allow_large = false) -> std::vector<Digraph>;
    auto ditree_count(std::size_t n) -> std::uint64_t;

    /// Every digraph on n <= 4 vertices, indexed by the bits of its arc mask.
    auto for_each_digraph(std::size_t n, const std::function<void(const Digraph &)> & f) -> void;

    /// Every acyclic digraph on n <= 5 labelled vertices.
    auto for_each_dag(std::size_t n, const std::function<void(const Digraph &)> & f) -> void;

    /**
     * A named construction with its parameters. Textual forms:
     *   cycle:5  Gm:3  Hm:3  C4:0202  path:4  arcless:3  K1star  fig1G  fig1H  fig5D
     *   Tstar:<spec>  corona:ff/dii  arcs:4:0>1,0>2,3>0  (u=v is both directions)
     *   ditree:n=6,seed=42,w=1/1/1  digraph:n=6,seed=1,p=0.3  dag:n=6,seed=1,p=0.3
     */
    struct FamilySpec
    {
        std::string name;
        std::vector<std::size_t> params;
        std::string variant;
        std::optional<std::uint64_t> seed;
        std::array<double, 3> weights{1, 1, 1};
        double density = 0.3;
        std::shared_ptr<const FamilySpec> base;
    };

    class FamilySpecError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    auto parse_family_spec(const std::string & text) -> FamilySpec;
    auto to_string(const FamilySpec & spec) -> std::string;
    auto make_family(const FamilySpec & spec) -> Digraph;
    auto make_family(const std::string & text) -> Digraph;

    /// The dominating set {(v1,v2i)} u {(v2i,v2j+1)} u {(v2j+1,v1)} of G_m □ G_m.
    auto gm_square_witness(std::size_t m) -> VertexSet;
    /// The dominating set {(a_i,a)} u {(b_i,b)} u {(c_i,c)} of H_m □ G_1.
    auto hm_triangle_witness(std::size_t k) -> VertexSet;
    /// A dominating set of K1* □ P4 of size 8.
    auto k1_star_path_witness() -> VertexSet;
    /// (A x {u}) u (B x {v}) in G □ C4^(0,2,0,2), for a partition of V(G) into dominating sets.
    auto c4_partition_witness(const ProductVertexMap & map, const VertexSet & a, const VertexSet & b) -> VertexSet;
    /// {(c,u),(a,v),(c,x),(a,y),(b,z)} in G1 □ H.
    auto fig1_witness() -> VertexSet;
}

#endif
