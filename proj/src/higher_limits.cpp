#include "facelim/higher_limits.hpp"

#include "facelim/stanley_reisner.hpp"

#include <map>

namespace facelim {

CochainLevel cochain_level(const FaceDiagram& d, int n) {
    CochainLevel level;
    level.n = n;
    level.flag_list = flags(d.complex(), n);
    int total = 0;
    for (const auto& flag : level.flag_list) {
        level.offsets.push_back(total);
        total += d.dim(flag.back());
    }
    level.total_dim = total;
    return level;
}

ExactMatrix coboundary(const FaceDiagram& d, int n) {
    if (n < 0) throw InputError("coboundary: negative level");
    CochainLevel src = cochain_level(d, n);
    CochainLevel dst = cochain_level(d, n + 1);

    std::map<std::vector<Face>, int, bool (*)(const std::vector<Face>&, const std::vector<Face>&)> src_index(
        [](const std::vector<Face>& a, const std::vector<Face>& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), FaceLess{});
        });
    for (size_t i = 0; i < src.flag_list.size(); ++i) src_index.emplace(src.flag_list[i], static_cast<int>(i));

    ExactMatrix delta(d.domain(), dst.total_dim, src.total_dim);
    std::vector<Face> shorter;
    for (size_t fi = 0; fi < dst.flag_list.size(); ++fi) {
        const auto& flag = dst.flag_list[fi];
        int row = dst.offsets[fi];
        // omission of an inner face leaves the final value untouched
        for (int k = 0; k <= n; ++k) {
            shorter.clear();
            for (int t = 0; t <= n + 1; ++t)
                if (t != k) shorter.push_back(flag[t]);
            int col = src.offsets[src_index.at(shorter)];
            int sign = (k % 2 == 0) ? 1 : -1;
            int dim = d.dim(flag.back());
            for (int r = 0; r < dim; ++r) delta.set(row + r, col + r, delta.at(row + r, col + r) + sign);
        }
        // omitting the last face composes with the structure map of the tail
        shorter.assign(flag.begin(), flag.end() - 1);
        int col = src.offsets[src_index.at(shorter)];
        int sign = ((n + 1) % 2 == 0) ? 1 : -1;
        delta.accumulate(row, col, d.map_between(flag[n], flag[n + 1]), mpq_class(sign));
    }
    return delta;
}

ModuleSummary higher_limit(const FaceDiagram& d, int i) {
    if (i < 0) throw InputError("higher_limit: negative degree");
    ExactMatrix d_out = coboundary(d, i);
    if (i == 0) {
        ExactMatrix d_in(d.domain(), d_out.cols(), 0);
        return cohomology_at(d_in, d_out);
    }
    return cohomology_at(coboundary(d, i - 1), d_out);
}

E2Table bk_e2_table(const SimplicialComplex& k, const CoefficientDomain& domain, int i_max, int j_max) {
    if (i_max < 0 || j_max < 0) throw InputError("bk_e2_table: negative bound");
    E2Table table;
    table.i_max = i_max;
    table.j_top_max = 2 * j_max;
    for (int j = 0; j <= j_max; ++j) {
        FaceDiagram d = exp_cohomology_diagram(k, j, domain).contra;
        for (int i = 0; i <= i_max; ++i) {
            table.entries[{i, 2 * j}] = higher_limit(d, i);
            if (2 * j + 1 <= table.j_top_max) table.entries[{i, 2 * j + 1}] = ModuleSummary{};
        }
    }
    return table;
}

CheckResult verify_sharpness(const SimplicialComplex& k, const CoefficientDomain& domain, int i_max, int j_max) {
    E2Table table = bk_e2_table(k, domain, i_max, j_max);
    StanleyReisnerAlgebra algebra{k, domain};
    for (int j = 0; j <= j_max; ++j) {
        for (int i = 0; i <= i_max; ++i) {
            const ModuleSummary& cell = table.at(i, 2 * j);
            if (i == 0) {
                ModuleSummary expected = ModuleSummary::free(hilbert_function(algebra, j));
                if (cell != expected)
                    return CheckResult::fail("(0," + std::to_string(2 * j) + ") = " + cell.str(domain) +
                                             ", expected " + expected.str(domain));
            } else if (!cell.is_zero()) {
                return CheckResult::fail("(" + std::to_string(i) + "," + std::to_string(2 * j) + ") = " +
                                         cell.str(domain));
            }
        }
    }
    return CheckResult::ok();
}

}  // namespace facelim
