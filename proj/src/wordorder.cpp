#include "biorder/wordorder.hpp"

#include "biorder/specialpoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <stdexcept>

namespace biorder {

std::string to_string(CompareResult r)
{
    switch (r) {
    case CompareResult::Less: return "<";
    case CompareResult::Equal: return "=";
    case CompareResult::Greater: return ">";
    case CompareResult::DepthExceeded: return "depth-exceeded";
    }
    return "?";
}

InvariantWordOrder::InvariantWordOrder(FreeEndo endo)
    : endo_(std::move(endo)), matrix_(abelianization_matrix(endo_))
{
    if (biorder::abs(matrix_.determinant()) != 1)
        throw std::invalid_argument("InvariantWordOrder: abelianization is not an automorphism of Z^p");
    if (!is_special(char_poly(matrix_)).isSpecial)
        throw std::invalid_argument(
            "InvariantWordOrder: characteristic polynomial of the abelianization is not special");
}

const OrderOracle& InvariantWordOrder::oracle(int n) const
{
    if (n < 1) throw std::invalid_argument("InvariantWordOrder::oracle: depth must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cacheMutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return *it->second;
    }
    // build outside the lock; construction may be expensive
    auto built = std::make_shared<const OrderOracle>(matrix_.kronecker_power(n));
    std::lock_guard<std::mutex> lock(cacheMutex_);
    auto [it, inserted] = cache_.emplace(n, std::move(built));
    (void)inserted; // a racing builder may have won; either instance is fine
    return *it->second;
}

InvariantWordOrder::Comparison
InvariantWordOrder::compare_with_depth(const FreeWord& u, const FreeWord& v, int maxDepth) const
{
    if (maxDepth < 1) throw std::invalid_argument("compare: depth cap must be >= 1");
    if (u.max_generator() > endo_.rank || v.max_generator() > endo_.rank)
        throw std::invalid_argument("compare: generator index out of range");
    const FreeWord w = u.inverse() * v;
    if (w.empty()) return {CompareResult::Equal, 0};

    const TruncatedSeries series = magnus_expand(w, endo_.rank, maxDepth);
    const int depth = series.lowest_degree();
    if (depth == 0) return {CompareResult::DepthExceeded, 0};

    const int s = oracle(depth).sign(series.component(depth));
    if (s == 0)
        throw std::logic_error("compare: nonzero component ordered as zero");
    // w = u^(-1) v > 1 means u < v
    return {s > 0 ? CompareResult::Less : CompareResult::Greater, depth};
}

CompareResult InvariantWordOrder::compare(const FreeWord& u, const FreeWord& v, int maxDepth) const
{
    return compare_with_depth(u, v, maxDepth).result;
}

bool verify_product_eigenvalues(const SquareIntMatrix& m, int n, double tol)
{
    if (n < 1) throw std::invalid_argument("verify_product_eigenvalues: n must be >= 1");
    if (tol <= 0) throw std::invalid_argument("verify_product_eigenvalues: tol must be positive");
    const int p = m.size();
    double dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= p;
        if (dim > 1024) throw std::invalid_argument("verify_product_eigenvalues: dimension cap exceeded");
    }
    const int D = static_cast<int>(dim);

    auto toEigen = [](const SquareIntMatrix& a) {
        Eigen::MatrixXd e(a.size(), a.size());
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j) e(i, j) = a.at(i, j).get_d();
        return e;
    };

    Eigen::VectorXcd base;
    {
        Eigen::EigenSolver<Eigen::MatrixXd> solver(toEigen(m));
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("verify_product_eigenvalues: eigensolver failed");
        base = solver.eigenvalues();
    }
    Eigen::VectorXcd tensor;
    {
        Eigen::EigenSolver<Eigen::MatrixXd> solver(toEigen(m.kronecker_power(n)));
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("verify_product_eigenvalues: eigensolver failed");
        tensor = solver.eigenvalues();
    }

    // all ordered n-fold products of the base eigenvalues
    std::vector<std::complex<double>> products;
    products.reserve(static_cast<size_t>(D));
    std::vector<int> idx(static_cast<size_t>(n), 0);
    while (true) {
        std::complex<double> prod(1.0, 0.0);
        for (int i : idx) prod *= base(i);
        products.push_back(prod);
        int pos = n - 1;
        while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == p) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    if (static_cast<int>(products.size()) != D) return false;

    // greedy nearest matching of the two multisets
    std::vector<bool> used(static_cast<size_t>(D), false);
    for (int i = 0; i < D; ++i) {
        double best = -1;
        int bestJ = -1;
        for (int j = 0; j < D; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            const double dist = std::abs(tensor(i) - products[static_cast<size_t>(j)]);
            if (bestJ < 0 || dist < best) {
                best = dist;
                bestJ = j;
            }
        }
        if (bestJ < 0 || best > tol) return false;
        used[static_cast<size_t>(bestJ)] = true;
    }
    return true;
}

} // namespace biorder
