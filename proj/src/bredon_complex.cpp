#include <algorithm>

#include "bredon/cog.hpp"

namespace bredon {

CellOrbits cell_orbits(const Development& dev)
{
    const auto& x = dev.complex();
    const auto& g = dev.group();
    const auto order = static_cast<std::uint32_t>(g.order());
    CellOrbits out;
    for (int n = 0; n <= x.dimension(); ++n) {
        const auto& faces = x.faces(n);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> locate(faces.size(), {UINT32_MAX, 0});
        std::vector<CellOrbits::Orbit> orbits;
        for (std::uint32_t f = 0; f < faces.size(); ++f) {
            if (locate[f].first != UINT32_MAX)
                continue;
            const auto o = static_cast<std::uint32_t>(orbits.size());
            std::vector<std::uint32_t> stab;
            for (std::uint32_t t = 0; t < order; ++t) {
                auto img = x.face_id(dev.translate(t, faces[f]));
                if (!img)
                    throw std::logic_error("G does not act on the development");
                if (*img == f)
                    stab.push_back(t);
                if (locate[*img].first == UINT32_MAX)
                    locate[*img] = {o, t};
            }
            orbits.push_back({faces[f], g.make_subgroup(std::move(stab))});
        }
        out.by_degree.push_back(std::move(orbits));
        out.locate.push_back(std::move(locate));
    }
    return out;
}

namespace {

struct BredonBasis {
    // index[n][orbit][coset] = basis position or -1.
    std::vector<std::vector<std::vector<std::int64_t>>> index;
    std::vector<std::size_t> sizes;
};

// (G/K)^H as cosets yK with y^-1 H y inside K; empty unless |H| = |K|, which
// together with a fixed coset means H is conjugate to K.
BredonBasis bredon_basis(const Development& dev, const CellOrbits& orbits, std::uint32_t j)
{
    const auto& g = dev.group();
    const auto& k = dev.local(j);
    BredonBasis b;
    for (const auto& level : orbits.by_degree) {
        std::size_t count = 0;
        std::vector<std::vector<std::int64_t>> idx;
        for (const auto& orb : level) {
            std::vector<std::int64_t> row(dev.num_cosets(j), -1);
            if (orb.stabilizer.size() == k.size())
                for (std::uint32_t c = 0; c < dev.num_cosets(j); ++c) {
                    const auto y = dev.coset_rep(j, c);
                    const bool fixed = std::all_of(orb.stabilizer.elements.begin(), orb.stabilizer.elements.end(),
                                                   [&](auto h) { return k.contains(g.conj(h, y)); });
                    if (fixed)
                        row[c] = static_cast<std::int64_t>(count++);
                }
            idx.push_back(std::move(row));
        }
        b.index.push_back(std::move(idx));
        b.sizes.push_back(count);
    }
    if (b.sizes.empty())
        b.sizes.push_back(0);
    return b;
}

}  // namespace

// Basis in degree n: pairs (orbit rep sigma, coset yK) with yK fixed by
// H_sigma and H_sigma conjugate to K. Cells whose stabilizer is a smaller
// subconjugate of K would contribute (G/K)^H too, but that part is killed
// in Q_K. The coboundary is the cellular one written on orbit
// representatives: if face_i(sigma) = t . tau, the value at (tau, cK) is
// sent to (sigma, tcK) with sign (-1)^i.
CochainComplexZ bredon_cochain_complex(const Development& dev, std::uint32_t j)
{
    const auto& x = dev.complex();
    const auto& g = dev.group();
    const auto orbits = cell_orbits(dev);
    const auto basis = bredon_basis(dev, orbits, j);

    std::vector<IntMatrix> deltas;
    for (int n = 0; n < x.dimension(); ++n) {
        const auto nn = static_cast<std::size_t>(n);
        IntMatrix m(basis.sizes[nn + 1], basis.sizes[nn]);
        const auto& upper = orbits.by_degree[nn + 1];
        for (std::uint32_t o = 0; o < upper.size(); ++o) {
            const auto& rows = basis.index[nn + 1][o];
            if (std::all_of(rows.begin(), rows.end(), [](auto r) { return r < 0; }))
                continue;
            const auto& sigma = upper[o].rep;
            for (std::size_t i = 0; i < sigma.size(); ++i) {
                Simplex face = sigma;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                // face_i(sigma) = t . tau with tau an orbit representative.
                const auto [tau, t] = orbits.locate[nn][*x.face_id(face)];
                const auto& cols = basis.index[nn][tau];
                for (std::uint32_t c = 0; c < cols.size(); ++c) {
                    if (cols[c] < 0)
                        continue;
                    const auto target = dev.coset_of(j, g.mul(t, dev.coset_rep(j, c)));
                    const auto r = rows[target];
                    if (r < 0)
                        throw std::logic_error("translated coset is not fixed by the cell stabilizer");
                    m.add(static_cast<std::size_t>(r), static_cast<std::size_t>(cols[c]), Int(i % 2 == 0 ? 1 : -1));
                }
            }
        }
        deltas.push_back(std::move(m));
    }
    return CochainComplexZ(0, basis.sizes, std::move(deltas));
}

bool BredonReport::ok() const
{
    return basis_counts_match &&
           std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& c) { return c.match; });
}

BredonReport verify_bredon(const Development& dev, std::uint32_t j)
{
    BredonReport rep;
    rep.label = dev.q().id(j);
    const auto cx = bredon_cochain_complex(dev, j);
    const auto fp = fixed_pair(dev, j);
    auto left = cx.cohomology_all();
    auto right = relative_cohomology_all(fp.pair);
    const auto n = std::max(left.size(), right.size());
    left.resize(n);
    right.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        rep.degrees.push_back({static_cast<int>(k), left[k], right[k], left[k] == right[k]});
    rep.basis_counts_match = true;
    for (std::size_t k = 0; k < n; ++k)
        if (cx.basis_size(static_cast<int>(k)) != relative_basis(fp.pair, static_cast<int>(k)).size())
            rep.basis_counts_match = false;
    return rep;
}

}  // namespace bredon
