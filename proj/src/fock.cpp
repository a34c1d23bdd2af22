#include "zenossep/fock.hpp"

#include <stdexcept>

namespace zenossep {

void validate(const Configuration& config) {
    if (config.n_sites < 1 || config.n_sites > kMaxSites)
        throw std::invalid_argument("configuration: n_sites must be in [1, " +
                                    std::to_string(kMaxSites) + "]");
    if (config.n_sites < 32 && (config.bits >> config.n_sites) != 0)
        throw std::invalid_argument("configuration: bits set beyond site n_sites");
}

std::size_t fock_dimension(int n_sites) {
    if (n_sites < 1 || n_sites > kMaxSites)
        throw std::invalid_argument("n_sites must be in [1, " + std::to_string(kMaxSites) + "]");
    return std::size_t{1} << n_sites;
}

std::string to_string(const Configuration& config) {
    validate(config);
    std::string text(static_cast<std::size_t>(config.n_sites), '0');
    for (int site = 1; site <= config.n_sites; ++site)
        if (config.bits & (1u << (site - 1))) text[site - 1] = '1';
    return text;
}

Configuration config_from_string(std::string_view text) {
    if (text.empty() || text.size() > static_cast<std::size_t>(kMaxSites))
        throw std::invalid_argument("configuration string must have 1.." +
                                    std::to_string(kMaxSites) + " characters");
    Configuration config{0, static_cast<int>(text.size())};
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '1')
            config.bits |= 1u << k;
        else if (text[k] != '0')
            throw std::invalid_argument("configuration string must contain only 0/1");
    }
    return config;
}

namespace {

void check_site(int site, int n_sites) {
    fock_dimension(n_sites);
    if (site < 1 || site > n_sites)
        throw std::invalid_argument("site index must be in [1, n_sites]");
}

}  // namespace

Eigen::MatrixXcd annihilator(int site, int n_sites) {
    check_site(site, n_sites);
    const auto dim = static_cast<Eigen::Index>(fock_dimension(n_sites));
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint32_t word = 0; word < static_cast<std::uint32_t>(dim); ++word)
        if (auto step = apply_annihilator(word, site))
            op(static_cast<Eigen::Index>(step->bits), static_cast<Eigen::Index>(word)) =
                static_cast<double>(step->sign);
    return op;
}

Eigen::MatrixXcd creator(int site, int n_sites) {
    return annihilator(site, n_sites).adjoint();
}

Eigen::MatrixXcd number_operator(int site, int n_sites) {
    check_site(site, n_sites);
    const auto dim = static_cast<Eigen::Index>(fock_dimension(n_sites));
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    const std::uint32_t mask = 1u << (site - 1);
    for (std::uint32_t word = 0; word < static_cast<std::uint32_t>(dim); ++word)
        if (word & mask) op(word, word) = 1.0;
    return op;
}

Eigen::MatrixXcd occupation_projector(int site, int occupied, int n_sites) {
    if (occupied != 0 && occupied != 1)
        throw std::invalid_argument("occupation must be 0 or 1");
    Eigen::MatrixXcd filled = number_operator(site, n_sites);
    if (occupied == 1) return filled;
    return Eigen::MatrixXcd::Identity(filled.rows(), filled.cols()) - filled;
}

Eigen::MatrixXcd config_projector(const Configuration& config) {
    validate(config);
    const auto dim = static_cast<Eigen::Index>(fock_dimension(config.n_sites));
    Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(dim, dim);
    projector(static_cast<Eigen::Index>(basis_index(config)),
              static_cast<Eigen::Index>(basis_index(config))) = 1.0;
    return projector;
}

}  // namespace zenossep
