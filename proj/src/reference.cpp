#include "reference.hpp"

namespace qfq::reference {

QuantumMatrix global_quantum_matrix() {
    return make_quantum_matrix(5, {{0, 1, 4, 1, 4},
                                   {4, 0, 1, 4, 1},
                                   {1, 4, 0, 1, 4},
                                   {4, 1, 4, 0, 1},
                                   {1, 4, 1, 4, 0}});
}

QuantumMatrix published_local_matrix() {
    return make_quantum_matrix(5, {{0, 3, 4, 3},
                                   {2, 0, 4, 4},
                                   {1, 1, 0, 3},
                                   {2, 1, 2, 0}});
}

const std::vector<long long> &published_univariate() {
    static const std::vector<long long> v = {1, 5, 5, 20, -210, -131};
    return v;
}

const std::vector<long long> &published_quintic() {
    static const std::vector<long long> v = {1,     50,     1175,
                                             17450, 184275, 1450740};
    return v;
}

const std::map<Exponent, long long> &published_orbits() {
    static const std::map<Exponent, long long> t = {
        {{0, 0, 0, 0, 1}, 1},
        {{0, 0, 0, 1, 1}, 3},
        {{0, 0, 1, 0, 1}, -2},
        {{0, 0, 0, 1, 2}, 3},
        {{0, 0, 1, 1, 1}, -8},
        {{0, 0, 2, 0, 1}, 1},
        {{0, 1, 0, 1, 1}, 8},
        {{0, 0, 0, 1, 3}, 1},
        {{0, 0, 1, 1, 2}, 7},
        {{0, 0, 1, 2, 1}, -12},
        {{0, 0, 2, 1, 1}, 3},
        {{0, 1, 0, 1, 2}, -12},
        {{0, 1, 1, 0, 2}, 5},
        {{0, 1, 1, 1, 1}, -34},
        {{0, 0, 1, 1, 3}, -2},
        {{0, 0, 1, 2, 2}, 18},
        {{0, 0, 1, 3, 1}, -6},
        {{0, 0, 2, 1, 2}, -4},
        {{0, 0, 2, 2, 1}, -3},
        {{0, 1, 0, 1, 3}, 8},
        {{0, 1, 1, 1, 2}, -54},
        {{0, 1, 1, 2, 1}, 35},
        {{0, 1, 2, 0, 2}, 10},
        {{0, 1, 2, 1, 1}, 56},
        {{0, 2, 1, 1, 1}, 20},
        {{1, 1, 1, 1, 1}, -171},
    };
    return t;
}

}  // namespace qfq::reference
