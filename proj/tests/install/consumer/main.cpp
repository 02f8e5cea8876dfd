#include <ranklab/geninv.hpp>

#include <iostream>

int main() {
    using namespace ranklab;
    const Matrix a = Matrix::fromInts(2, 2, {1, 2, 3, 4});
    std::cout << "rank " << rank(a) << " pinv " << toString(moorePenrose(a)) << "\n";
}
