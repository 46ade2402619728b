#include "bredon/cohomology.hpp"

#include <sstream>

namespace bredon {

std::string CohomologyGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1)
            os << "^" << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

CohomologyGroup direct_sum(std::span<const CohomologyGroup> groups)
{
    CohomologyGroup out;
    std::vector<Int> all;
    for (const auto& g : groups) {
        out.betti += g.betti;
        all.insert(all.end(), g.torsion.begin(), g.torsion.end());
    }
    if (all.empty())
        return out;
    std::vector<std::vector<Int>> diag(all.size(), std::vector<Int>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i)
        diag[i][i] = all[i];
    out.torsion = smith_normal_form(IntMatrix::from_dense(diag)).torsion();
    return out;
}

CochainComplexZ::CochainComplexZ(int lo, std::vector<std::size_t> basis_sizes, std::vector<IntMatrix> coboundaries)
    : lo_(lo), sizes_(std::move(basis_sizes)), delta_(std::move(coboundaries))
{
    if (sizes_.empty())
        throw std::invalid_argument("cochain complex needs at least one degree");
    if (delta_.size() + 1 != sizes_.size())
        throw std::invalid_argument("cochain complex: expected one coboundary per adjacent degree pair");
    for (std::size_t k = 0; k < delta_.size(); ++k)
        if (delta_[k].cols() != sizes_[k] || delta_[k].rows() != sizes_[k + 1])
            throw std::invalid_argument("cochain complex: coboundary shape does not match basis sizes");
    for (std::size_t k = 0; k + 1 < delta_.size(); ++k)
        if (!(delta_[k + 1] * delta_[k]).is_zero())
            throw std::logic_error("cochain complex: delta o delta != 0 at degree " +
                                   std::to_string(lo_ + static_cast<int>(k)));
}

std::size_t CochainComplexZ::basis_size(int n) const
{
    if (n < lo() || n > hi())
        return 0;
    return sizes_[static_cast<std::size_t>(n - lo_)];
}

IntMatrix CochainComplexZ::coboundary(int n) const
{
    if (n >= lo() && n < hi())
        return delta_[static_cast<std::size_t>(n - lo_)];
    return IntMatrix(basis_size(n + 1), basis_size(n));
}

CohomologyGroup CochainComplexZ::cohomology(int n) const
{
    if (n < lo() || n > hi())
        throw DegreeOutOfRange("cohomology degree " + std::to_string(n) + " outside [" + std::to_string(lo()) +
                               ", " + std::to_string(hi()) + "]");
    CohomologyGroup g;
    long long rank_out = 0;
    if (n < hi())
        rank_out = static_cast<long long>(smith_normal_form(delta_[static_cast<std::size_t>(n - lo_)]).rank());
    long long rank_in = 0;
    if (n > lo()) {
        auto in = smith_normal_form(delta_[static_cast<std::size_t>(n - 1 - lo_)]);
        rank_in = static_cast<long long>(in.rank());
        g.torsion = in.torsion();
    }
    g.betti = static_cast<long long>(basis_size(n)) - rank_out - rank_in;
    return g;
}

std::vector<CohomologyGroup> CochainComplexZ::cohomology_all() const
{
    std::vector<SmithForm> forms;
    forms.reserve(delta_.size());
    for (const auto& d : delta_)
        forms.push_back(smith_normal_form(d));
    std::vector<CohomologyGroup> out(sizes_.size());
    for (std::size_t k = 0; k < sizes_.size(); ++k) {
        long long rank_out = k < forms.size() ? static_cast<long long>(forms[k].rank()) : 0;
        long long rank_in = 0;
        if (k > 0) {
            rank_in = static_cast<long long>(forms[k - 1].rank());
            out[k].torsion = forms[k - 1].torsion();
        }
        out[k].betti = static_cast<long long>(sizes_[k]) - rank_out - rank_in;
    }
    return out;
}

CohomologyGroup cohomology(const CochainComplexZ& cx, int n)
{
    return cx.cohomology(n);
}

IntMatrix coboundary_matrix(const SimplicialComplex& c, int n)
{
    IntMatrix m(c.num_faces(n + 1), c.num_faces(n));
    const auto& upper = c.faces(n + 1);
    for (std::size_t r = 0; r < upper.size(); ++r) {
        const auto& s = upper[r];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = s;
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
            auto col = c.face_id(f);
            if (!col)
                throw std::logic_error("complex is not closed under faces");
            m.add(r, *col, Int(i % 2 == 0 ? 1 : -1));
        }
    }
    return m;
}

std::vector<std::uint32_t> relative_basis(const ComplexPair& pair, int n)
{
    std::vector<std::uint32_t> out;
    const auto& faces = pair.total().faces(n);
    for (std::uint32_t i = 0; i < faces.size(); ++i)
        if (!pair.in_sub(faces[i]))
            out.push_back(i);
    return out;
}

CochainComplexZ relative_cochain_complex(const ComplexPair& pair)
{
    const auto& total = pair.total();
    const int top = std::max(total.dimension(), 0);
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<std::vector<std::int64_t>> position;
    for (int n = 0; n <= top; ++n) {
        basis.push_back(relative_basis(pair, n));
        std::vector<std::int64_t> pos(total.num_faces(n), -1);
        for (std::size_t k = 0; k < basis.back().size(); ++k)
            pos[basis.back()[k]] = static_cast<std::int64_t>(k);
        position.push_back(std::move(pos));
    }
    std::vector<std::size_t> sizes;
    for (const auto& b : basis)
        sizes.push_back(b.size());
    std::vector<IntMatrix> deltas;
    for (int n = 0; n < top; ++n) {
        const auto nn = static_cast<std::size_t>(n);
        IntMatrix m(basis[nn + 1].size(), basis[nn].size());
        for (std::size_t r = 0; r < basis[nn + 1].size(); ++r) {
            const auto& s = total.faces(n + 1)[basis[nn + 1][r]];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                auto col = position[nn][*total.face_id(f)];
                if (col >= 0)
                    m.add(r, static_cast<std::size_t>(col), Int(i % 2 == 0 ? 1 : -1));
            }
        }
        deltas.push_back(std::move(m));
    }
    return CochainComplexZ(0, std::move(sizes), std::move(deltas));
}

CochainComplexZ cochain_complex(const SimplicialComplex& c)
{
    const int top = std::max(c.dimension(), 0);
    std::vector<std::size_t> sizes;
    std::vector<IntMatrix> deltas;
    for (int n = 0; n <= top; ++n)
        sizes.push_back(c.num_faces(n));
    for (int n = 0; n < top; ++n)
        deltas.push_back(coboundary_matrix(c, n));
    return CochainComplexZ(0, std::move(sizes), std::move(deltas));
}

namespace {

CochainComplexZ augmented_complex(const SimplicialComplex& c)
{
    const int top = std::max(c.dimension(), 0);
    std::vector<std::size_t> sizes{1};
    std::vector<IntMatrix> deltas;
    for (int n = 0; n <= top; ++n)
        sizes.push_back(c.num_faces(n));
    IntMatrix aug(c.num_faces(0), 1);
    for (std::size_t r = 0; r < c.num_faces(0); ++r)
        aug.add(r, 0, Int(1));
    deltas.push_back(std::move(aug));
    for (int n = 0; n < top; ++n)
        deltas.push_back(coboundary_matrix(c, n));
    return CochainComplexZ(-1, std::move(sizes), std::move(deltas));
}

}  // namespace

CohomologyGroup reduced_cohomology(const SimplicialComplex& c, int n)
{
    if (n < -1)
        throw DegreeOutOfRange("reduced cohomology is defined from degree -1");
    auto cx = augmented_complex(c);
    if (n > cx.hi())
        return {};
    return cx.cohomology(n);
}

std::vector<CohomologyGroup> reduced_cohomology_all(const SimplicialComplex& c)
{
    return augmented_complex(c).cohomology_all();
}

std::vector<CohomologyGroup> relative_cohomology_all(const ComplexPair& pair)
{
    return relative_cochain_complex(pair).cohomology_all();
}

}  // namespace bredon
