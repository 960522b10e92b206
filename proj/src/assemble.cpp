#include "tsgen/assemble.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <queue>

#include "tsgen/big.hpp"
#include "tsgen/cube.hpp"
#include "tsgen/gadgets.hpp"
#include "tsgen/honeycomb.hpp"

namespace tsgen {

namespace {

// Per tree vertex, the map from base position (index into the sorted
// residues) to abstract cube bit, transported from the root so that tree
// neighbours agree on their two shared residues.
std::vector<std::array<int, 3>> compute_gauges(const SpanningTree& tree, int root) {
    int m = static_cast<int>(tree.verts.size());
    std::vector<std::array<int, 3>> sigma(m, {-1, -1, -1});
    sigma[root] = {0, 1, 2};
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : tree.adj[u]) {
            if (sigma[w][0] >= 0 || sigma[w][1] >= 0 || sigma[w][2] >= 0) continue;
            int used = 0;
            for (int pw = 0; pw < 3; ++pw) {
                int r = tree.verts[w].r[pw];
                for (int pu = 0; pu < 3; ++pu)
                    if (tree.verts[u].r[pu] == r) {
                        sigma[w][pw] = sigma[u][pu];
                        used |= 1 << sigma[u][pu];
                    }
            }
            for (int pw = 0; pw < 3; ++pw)
                if (sigma[w][pw] < 0) {
                    int free_bit = 0;
                    while (used & (1 << free_bit)) ++free_bit;
                    sigma[w][pw] = free_bit;
                }
            q.push(w);
        }
    }
    return sigma;
}

Block block_over(const std::array<int, 3>& base, const std::array<int, 3>& sigma,
                 int code) {
    return make_block(finite_point(base[0], (code >> sigma[0]) & 1),
                      finite_point(base[1], (code >> sigma[1]) & 1),
                      finite_point(base[2], (code >> sigma[2]) & 1));
}

int bit_at(const Block& b, int residue) {
    for (Point p : b)
        if (!is_infinity(p) && residue_of(p) == residue) return bit_of(p);
    throw NotFound("bit_at: residue not present");
}

bool has_residue(const Block& b, int residue) {
    for (Point p : b)
        if (!is_infinity(p) && residue_of(p) == residue) return true;
    return false;
}

} // namespace

Assembly assemble(int n, int lambda, const ArcColoring& coloring) {
    require_valid_n(n);
    require_valid_lambda(n, lambda);
    if (coloring.n() != n) throw InvalidParams("assemble: coloring size mismatch");
    int t = lambda / 2;

    TripleSystem design = union_design(n, lambda, coloring);
    std::map<Block, std::size_t> index;
    for (std::size_t i = 0; i < design.blocks.size(); ++i)
        index.emplace(design.blocks[i], i);
    assert(index.size() == design.blocks.size());

    HamWalk walk = multi_walk(n, t);
    const ResidueTriple Z = walk.seq.front();
    const ResidueTriple Zp = walk.seq[1];
    SpanningTree tree = walk_to_tree(n, t, walk);
    TreeCycle cycle = tree_cube_cycle(tree);
    std::vector<std::array<int, 3>> sigma = compute_gauges(tree, cycle.root);

    int L = static_cast<int>(cycle.seq.size());
    std::vector<Block> pblocks(L);
    for (int i = 0; i < L; ++i) {
        auto [v, code] = cycle.seq[i];
        pblocks[i] = block_over(tree.verts[v].r, sigma[v], code);
    }

    int zp_idx = -1;
    {
        auto it = std::lower_bound(tree.verts.begin(), tree.verts.end(), Zp);
        assert(it != tree.verts.end() && *it == Zp);
        zp_idx = static_cast<int>(it - tree.verts.begin());
    }
    const std::array<int, 3>& zbase = Z.r;
    const std::array<int, 3> zsigma = {0, 1, 2};
    int free_pos = -1;  // position of the Z residue not shared with Zp
    for (int k = 0; k < 3; ++k) {
        bool shared = zbase[k] == Zp.r[0] || zbase[k] == Zp.r[1] || zbase[k] == Zp.r[2];
        if (!shared) free_pos = k;
    }
    assert(free_pos >= 0);
    int one_pos = -1, four_pos = -1, top_pos = -1;
    for (int k = 0; k < 3; ++k) {
        if (zbase[k] == 1) one_pos = k;
        if (zbase[k] == imod(4, n)) four_pos = k;
        if (zbase[k] == imod(n - 2, n)) top_pos = k;
    }
    assert(one_pos >= 0 && four_pos >= 0 && top_pos >= 0);

    const int inv3 = inverse_mod(3, n);

    for (int i = 0; i < L; ++i) {
        for (int which = 0; which < 2; ++which) {
            int ia = which == 0 ? i : (i + 1) % L;  // x, over Zp
            int ib = which == 0 ? (i + 1) % L : i;  // x'
            if (cycle.seq[ia].first != zp_idx) continue;
            const Block& x = pblocks[ia];
            const Block& xp = pblocks[ib];
            const std::array<int, 3>& base = tree.verts[cycle.seq[ib].first].r;

            for (int k1 = 0; k1 < 3; ++k1)
                for (int k2 = 0; k2 < 3; ++k2) {
                    if (k1 == k2) continue;
                    int p = base[k1], q = base[k2];
                    int cls = imod((q + 2LL * p) * inv3, n);
                    if (cls >= t) continue;
                    Arc arc{cls, imod(p - cls, n), p, q};
                    assert(imod(cls - 2LL * arc.h, n) == q);
                    Gadget gad = make_gadget(n, arc, coloring);
                    int bp = bit_at(xp, p), bq = bit_at(xp, q);
                    int c = coloring.color(arc) == ArcColor::Blue ? 1 : 0;
                    Block y = leaf_with(gad, bp ^ bq ^ c, q, bq);
                    assert(block_contains(y, finite_point(p, bp)));

                    RPath rp;
                    try {
                        rp = r_path(n, lambda, coloring, y);
                    } catch (const SearchExhausted&) {
                        continue;
                    }
                    const Block& y2 = rp.seq.back();

                    // Seam blocks over Z: z continues from y2, z' returns
                    // to x; the free bits are chosen so the fiber path
                    // exists (odd bit distance).
                    int code_z_base = (bit_at(y2, zbase[four_pos]) << four_pos) |
                                      (bit_at(y2, zbase[top_pos]) << top_pos);
                    int code_zp_base = 0;
                    for (int k = 0; k < 3; ++k)
                        if (k != free_pos && has_residue(x, zbase[k]))
                            code_zp_base |= bit_at(x, zbase[k]) << k;
                    int code_z = -1, code_zp = -1;
                    for (int i4 = 0; i4 < 2 && code_z < 0; ++i4)
                        for (int zf = 0; zf < 2; ++zf) {
                            int cz = code_z_base | (i4 << one_pos);
                            int czp = code_zp_base | (zf << free_pos);
                            if (std::popcount(static_cast<unsigned>(cz ^ czp)) % 2 ==
                                1) {
                                code_z = cz;
                                code_zp = czp;
                                break;
                            }
                        }
                    assert(code_z >= 0);

                    std::vector<Block> full = rp.seq;
                    for (int code : cube_ham_path(code_z, code_zp))
                        full.push_back(block_over(zbase, zsigma, code));
                    int dir = ib == (ia + 1) % L ? -1 : 1;
                    for (int s = 0, at = ia; s < L; ++s, at = (at + dir + L) % L)
                        full.push_back(pblocks[at]);

                    if (full.size() != design.blocks.size())
                        throw ConstructionFailure("assemble: wrong block count");
                    std::vector<std::size_t> order;
                    order.reserve(full.size());
                    std::vector<char> used(design.blocks.size(), 0);
                    for (const Block& b : full) {
                        auto it = index.find(b);
                        if (it == index.end())
                            throw ConstructionFailure("assemble: foreign block");
                        if (used[it->second])
                            throw ConstructionFailure("assemble: repeated block");
                        used[it->second] = 1;
                        order.push_back(it->second);
                    }
                    for (std::size_t s = 0; s < full.size(); ++s) {
                        const Block& a = full[s];
                        const Block& b = full[(s + 1) % full.size()];
                        if (intersection_size(a, b) != 2)
                            throw ConstructionFailure("assemble: seam not adjacent");
                    }

                    AssemblyParts parts{static_cast<std::size_t>(L), rp.seq.size(),
                                        8};
                    return Assembly{std::move(design), std::move(order), parts};
                }
        }
    }
    throw ConstructionFailure("assemble: no product-cycle cut succeeded");
}

} // namespace tsgen
