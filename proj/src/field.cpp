#include <sscodes/errors.hpp>
#include <sscodes/field.hpp>

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace sscodes
{
    namespace
    {
        constexpr std::uint64_t max_field_order = std::uint64_t{1} << 32;
        constexpr std::uint64_t table_threshold = 256;
        constexpr std::uint64_t max_view_order = std::uint64_t{1} << 22;

        auto trim(Polynomial & poly) -> void
        {
            while (! poly.empty() && poly.back() == 0)
                poly.pop_back();
        }

        // Remainder of a modulo a monic g over F_p.
        auto poly_mod(Polynomial a, const Polynomial & g, std::uint32_t p) -> Polynomial
        {
            trim(a);
            const std::size_t dg = g.size() - 1;
            while (a.size() > dg) {
                const std::uint64_t c = a.back();
                const std::size_t shift = a.size() - 1 - dg;
                for (std::size_t j = 0; j <= dg; ++j) {
                    const std::uint64_t sub = (c * g[j]) % p;
                    a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
                }
                trim(a);
            }
            return a;
        }

        auto prime_factors(std::uint64_t n) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> result;
            for (std::uint64_t d = 2; d * d <= n; ++d) {
                if (n % d == 0) {
                    result.push_back(d);
                    while (n % d == 0)
                        n /= d;
                }
            }
            if (n > 1)
                result.push_back(n);
            return result;
        }
    }

    auto is_prime(std::uint64_t n) -> bool
    {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    auto is_irreducible(std::uint32_t p, const Polynomial & poly) -> bool
    {
        Polynomial f = poly;
        trim(f);
        if (f.size() < 2)
            return false;
        const std::size_t deg = f.size() - 1;
        if (deg == 1)
            return true;

        // make monic so that divisibility by monic candidates is well defined
        std::uint64_t lead_inv = 1;
        {
            std::uint64_t base = f.back(), e = p - 2;
            while (e) {
                if (e & 1)
                    lead_inv = (lead_inv * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
        }
        for (auto & c : f)
            c = static_cast<std::uint32_t>((c * lead_inv) % p);

        for (std::size_t d = 1; d <= deg / 2; ++d) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < d; ++i)
                count *= p;
            Polynomial g(d + 1, 0);
            g[d] = 1;
            for (std::uint64_t code = 0; code < count; ++code) {
                std::uint64_t rest = code;
                for (std::size_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(rest % p);
                    rest /= p;
                }
                if (poly_mod(f, g, p).empty())
                    return false;
            }
        }
        return true;
    }

    struct GaloisField::Data
    {
        std::uint32_t p = 0;
        std::uint32_t m = 0;
        Polynomial modulus;
        std::uint64_t order = 0;
        std::vector<std::uint64_t> powers; // p^i, i < m
        std::vector<std::uint32_t> mul_table;
    };

    GaloisField::GaloisField(std::shared_ptr<const Data> data) :
        data_(std::move(data))
    {
    }

    auto GaloisField::create(std::uint32_t p, std::uint32_t m, std::optional<Polynomial> modulus) -> GaloisField
    {
        if (! is_prime(p))
            throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
        if (m < 1)
            throw InvalidArgument("field degree must be at least 1");

        auto data = std::make_shared<Data>();
        data->p = p;
        data->m = m;
        data->order = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            data->powers.push_back(data->order);
            data->order *= p;
            if (data->order > max_field_order)
                throw InvalidArgument("field order exceeds 2^32");
        }

        if (modulus) {
            const Polynomial & f = *modulus;
            if (f.size() != m + 1 || f.back() != 1)
                throw InvalidArgument("modulus must be monic of degree " + std::to_string(m));
            if (std::any_of(f.begin(), f.end(), [&](std::uint32_t c) { return c >= p; }))
                throw InvalidArgument("modulus coefficient out of range");
            if (! is_irreducible(p, f))
                throw InvalidArgument("modulus is reducible over F_" + std::to_string(p));
            data->modulus = f;
        }
        else {
            Polynomial f(m + 1, 0);
            f[m] = 1;
            bool found = false;
            for (std::uint64_t code = 0; code < data->order && ! found; ++code) {
                std::uint64_t rest = code;
                for (std::uint32_t i = 0; i < m; ++i) {
                    f[i] = static_cast<std::uint32_t>(rest % p);
                    rest /= p;
                }
                found = is_irreducible(p, f);
            }
            if (! found)
                throw InvalidArgument("no irreducible polynomial found");
            data->modulus = f;
        }

        GaloisField field{data};
        if (data->order <= table_threshold) {
            const auto q = data->order;
            data->mul_table.resize(q * q);
            for (std::uint64_t a = 0; a < q; ++a)
                for (std::uint64_t b = 0; b < q; ++b)
                    data->mul_table[a * q + b] = static_cast<std::uint32_t>(
                        field.encode(field.mul_poly(field.decode(a), field.decode(b))));
        }
        return field;
    }

    auto GaloisField::of_order(std::uint64_t q) -> GaloisField
    {
        if (q < 2)
            throw InvalidArgument("field order must be a prime power >= 2");
        const auto factors = prime_factors(q);
        if (factors.size() != 1)
            throw InvalidArgument(std::to_string(q) + " is not a prime power");
        const std::uint64_t p = factors.front();
        std::uint32_t m = 0;
        for (std::uint64_t r = q; r > 1; r /= p)
            ++m;
        return create(static_cast<std::uint32_t>(p), m);
    }

    auto GaloisField::characteristic() const -> std::uint32_t { return data_->p; }
    auto GaloisField::degree() const -> std::uint32_t { return data_->m; }
    auto GaloisField::order() const -> std::uint64_t { return data_->order; }
    auto GaloisField::modulus() const -> const Polynomial & { return data_->modulus; }

    auto GaloisField::describe() const -> std::string
    {
        std::ostringstream out;
        out << "GF(" << order() << ")";
        if (degree() > 1) {
            out << " = F_" << characteristic() << "[x]/(";
            bool first = true;
            for (std::size_t i = data_->modulus.size(); i-- > 0;) {
                const auto c = data_->modulus[i];
                if (c == 0)
                    continue;
                if (! first)
                    out << " + ";
                first = false;
                if (c != 1 || i == 0)
                    out << c;
                if (i >= 1)
                    out << "x";
                if (i >= 2)
                    out << "^" << i;
            }
            out << ")";
        }
        return out.str();
    }

    auto GaloisField::operator== (const GaloisField & other) const -> bool
    {
        return data_ == other.data_ || (data_->p == other.data_->p && data_->m == other.data_->m
                                           && data_->modulus == other.data_->modulus);
    }

    auto GaloisField::decode(std::uint64_t code) const -> Polynomial
    {
        Polynomial coeffs(data_->m);
        for (std::uint32_t i = 0; i < data_->m; ++i) {
            coeffs[i] = static_cast<std::uint32_t>(code % data_->p);
            code /= data_->p;
        }
        return coeffs;
    }

    auto GaloisField::encode(const Polynomial & coeffs) const -> std::uint64_t
    {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < coeffs.size() && i < data_->m; ++i)
            code += coeffs[i] * data_->powers[i];
        return code;
    }

    auto GaloisField::mul_poly(const Polynomial & a, const Polynomial & b) const -> Polynomial
    {
        const std::uint64_t p = data_->p;
        Polynomial product(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                product[i + j] = static_cast<std::uint32_t>((product[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
        auto reduced = poly_mod(std::move(product), data_->modulus, data_->p);
        reduced.resize(data_->m, 0);
        return reduced;
    }

    auto GaloisField::add(std::uint64_t a, std::uint64_t b) const -> std::uint64_t
    {
        const std::uint64_t p = data_->p;
        if (data_->m == 1)
            return (a + b) % p;
        std::uint64_t result = 0;
        for (std::uint32_t i = 0; i < data_->m; ++i) {
            result += ((a % p + b % p) % p) * data_->powers[i];
            a /= p;
            b /= p;
        }
        return result;
    }

    auto GaloisField::neg(std::uint64_t a) const -> std::uint64_t
    {
        const std::uint64_t p = data_->p;
        if (data_->m == 1)
            return (p - a) % p;
        std::uint64_t result = 0;
        for (std::uint32_t i = 0; i < data_->m; ++i) {
            result += ((p - a % p) % p) * data_->powers[i];
            a /= p;
        }
        return result;
    }

    auto GaloisField::sub(std::uint64_t a, std::uint64_t b) const -> std::uint64_t
    {
        return add(a, neg(b));
    }

    auto GaloisField::mul(std::uint64_t a, std::uint64_t b) const -> std::uint64_t
    {
        if (! data_->mul_table.empty())
            return data_->mul_table[a * data_->order + b];
        if (data_->m == 1)
            return (a * b) % data_->p;
        return encode(mul_poly(decode(a), decode(b)));
    }

    auto GaloisField::pow(std::uint64_t a, std::uint64_t e) const -> std::uint64_t
    {
        std::uint64_t result = 1;
        while (e) {
            if (e & 1)
                result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    auto GaloisField::inv(std::uint64_t a) const -> std::uint64_t
    {
        if (a == 0)
            throw InvalidArgument("inversion of zero");
        return pow(a, data_->order - 2);
    }

    auto GaloisField::zero() const -> FieldElement { return element(0); }
    auto GaloisField::one() const -> FieldElement { return element(1); }

    auto GaloisField::element(std::uint64_t code) const -> FieldElement
    {
        if (code >= data_->order)
            throw InvalidArgument("element code " + std::to_string(code) + " out of range for " + describe());
        return FieldElement{*this, decode(code)};
    }

    auto GaloisField::from_coeffs(Polynomial coeffs) const -> FieldElement
    {
        return FieldElement{*this, std::move(coeffs)};
    }

    auto GaloisField::elements() const -> std::vector<FieldElement>
    {
        std::vector<FieldElement> result;
        result.reserve(data_->order);
        for (std::uint64_t c = 0; c < data_->order; ++c)
            result.push_back(element(c));
        return result;
    }

    FieldElement::FieldElement(GaloisField field, Polynomial coeffs) :
        field_(std::move(field)),
        coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() > field_.degree())
            throw InvalidArgument("too many coefficients for " + field_.describe());
        coeffs_.resize(field_.degree(), 0);
        for (auto c : coeffs_)
            if (c >= field_.characteristic())
                throw InvalidArgument("coefficient out of range for " + field_.describe());
    }

    auto FieldElement::code() const -> std::uint64_t { return field_.encode(coeffs_); }

    auto FieldElement::is_zero() const -> bool
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
    }

    auto FieldElement::is_one() const -> bool { return code() == 1; }

    auto FieldElement::check_same_field(const FieldElement & other) const -> void
    {
        if (! (field_ == other.field_))
            throw InvalidArgument("operands belong to different fields: " + field_.describe() + " vs "
                + other.field_.describe());
    }

    auto FieldElement::operator+ (const FieldElement & other) const -> FieldElement
    {
        check_same_field(other);
        return field_.element(field_.add(code(), other.code()));
    }

    auto FieldElement::operator- (const FieldElement & other) const -> FieldElement
    {
        check_same_field(other);
        return field_.element(field_.sub(code(), other.code()));
    }

    auto FieldElement::operator* (const FieldElement & other) const -> FieldElement
    {
        check_same_field(other);
        return field_.element(field_.mul(code(), other.code()));
    }

    auto FieldElement::operator/ (const FieldElement & other) const -> FieldElement
    {
        return *this * other.inverse();
    }

    auto FieldElement::operator- () const -> FieldElement { return field_.element(field_.neg(code())); }

    auto FieldElement::inverse() const -> FieldElement { return field_.element(field_.inv(code())); }

    auto FieldElement::pow(std::uint64_t e) const -> FieldElement { return field_.element(field_.pow(code(), e)); }

    auto FieldElement::multiplicative_order() const -> std::uint64_t
    {
        if (is_zero())
            throw InvalidArgument("zero has no multiplicative order");
        const std::uint64_t group = field_.order() - 1;
        std::uint64_t ord = group;
        const auto a = code();
        for (auto r : prime_factors(group))
            while (ord % r == 0 && field_.pow(a, ord / r) == 1)
                ord /= r;
        return ord;
    }

    auto FieldElement::operator== (const FieldElement & other) const -> bool
    {
        return field_ == other.field_ && coeffs_ == other.coeffs_;
    }

    auto FieldElement::operator<=> (const FieldElement & other) const -> std::strong_ordering
    {
        check_same_field(other);
        return code() <=> other.code();
    }

    auto arithmetic(const FieldElement & a, const FieldElement & b, FieldOp op) -> FieldElement
    {
        switch (op) {
            case FieldOp::Add: return a + b;
            case FieldOp::Sub: return a - b;
            case FieldOp::Mul: return a * b;
            case FieldOp::Inv: return a.inverse();
            case FieldOp::Neg: return -a;
        }
        throw InvalidArgument("unknown field operation");
    }

    auto primitive_element(const GaloisField & field) -> FieldElement
    {
        if (field.order() < 3)
            throw InvalidArgument("primitive element requested for a field of order < 3");
        for (std::uint64_t c = 1; c < field.order(); ++c) {
            auto e = field.element(c);
            if (e.multiplicative_order() == field.order() - 1)
                return e;
        }
        throw InvalidArgument("no primitive element found");
    }

    auto sixth_root_of_unity(const GaloisField & field) -> FieldElement
    {
        if (field.order() % 6 != 1)
            throw InvalidArgument("no primitive 6th root of unity: " + std::to_string(field.order())
                + " is not 1 mod 6");
        for (std::uint64_t c = 2; c < field.order(); ++c) {
            // x^2 - x + 1
            const auto value = field.add(field.sub(field.mul(c, c), c), 1);
            if (value != 0)
                continue;
            auto e = field.element(c);
            if (e.multiplicative_order() == 6)
                return e;
        }
        throw InvalidArgument("no primitive 6th root of unity found");
    }

    auto vector_add(const GaloisField & base, const VectorElement & a, const VectorElement & b) -> VectorElement
    {
        if (a.components.size() != b.components.size())
            throw InvalidArgument("vector dimension mismatch");
        VectorElement r;
        r.components.resize(a.components.size());
        for (std::size_t i = 0; i < a.components.size(); ++i)
            r.components[i] = base.add(a.components[i], b.components[i]);
        return r;
    }

    auto vector_sub(const GaloisField & base, const VectorElement & a, const VectorElement & b) -> VectorElement
    {
        if (a.components.size() != b.components.size())
            throw InvalidArgument("vector dimension mismatch");
        VectorElement r;
        r.components.resize(a.components.size());
        for (std::size_t i = 0; i < a.components.size(); ++i)
            r.components[i] = base.sub(a.components[i], b.components[i]);
        return r;
    }

    auto vector_scale(const GaloisField & base, std::uint64_t scalar, const VectorElement & v) -> VectorElement
    {
        VectorElement r;
        r.components.resize(v.components.size());
        for (std::size_t i = 0; i < v.components.size(); ++i)
            r.components[i] = base.mul(scalar, v.components[i]);
        return r;
    }

    auto point_index(const GaloisField & base, const VectorElement & v) -> std::uint64_t
    {
        std::uint64_t index = 0, scale = 1;
        for (auto c : v.components) {
            if (c >= base.order())
                throw InvalidArgument("vector component out of range");
            index += c * scale;
            scale *= base.order();
        }
        return index;
    }

    auto point_from_index(const GaloisField & base, std::size_t dim, std::uint64_t index) -> VectorElement
    {
        VectorElement v;
        v.components.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v.components[i] = index % base.order();
            index /= base.order();
        }
        return v;
    }

    VectorView::VectorView(GaloisField big, GaloisField base) :
        big_(std::move(big)),
        base_(std::move(base))
    {
        if (big_.characteristic() != base_.characteristic() || big_.degree() % base_.degree() != 0)
            throw InvalidArgument(big_.describe() + " is not an extension of " + base_.describe());
        dim_ = big_.degree() / base_.degree();
        prime_base_ = base_.degree() == 1;
        if (prime_base_)
            return;

        if (big_.order() > max_view_order)
            throw InvalidArgument("vector view over a non-prime base is limited to fields of order <= 2^22");

        // embed the base through the smallest root of its modulus
        const auto & f = base_.modulus();
        std::optional<std::uint64_t> root;
        for (std::uint64_t c = 0; c < big_.order() && ! root; ++c) {
            std::uint64_t value = 0;
            for (std::size_t i = f.size(); i-- > 0;)
                value = big_.add(big_.mul(value, c), f[i]);
            if (value == 0)
                root = c;
        }
        if (! root)
            throw InvalidArgument("base modulus has no root in " + big_.describe());

        const auto q1 = base_.order();
        embedding_.resize(q1);
        for (std::uint64_t c = 0; c < q1; ++c) {
            const auto coeffs = base_.decode(c);
            std::uint64_t value = 0;
            for (std::size_t i = coeffs.size(); i-- > 0;)
                value = big_.add(big_.mul(value, *root), coeffs[i]);
            embedding_[c] = value;
        }

        std::vector<std::uint64_t> basis;
        std::vector<char> in_span(big_.order(), 0);
        std::vector<std::uint64_t> span{0};
        in_span[0] = 1;
        for (std::uint64_t c = 1; c < big_.order() && basis.size() < dim_; ++c) {
            if (in_span[c])
                continue;
            basis.push_back(c);
            std::vector<std::uint64_t> next;
            next.reserve(span.size() * q1);
            for (auto s : span)
                for (std::uint64_t l = 0; l < q1; ++l) {
                    const auto v = big_.add(s, big_.mul(embedding_[l], c));
                    next.push_back(v);
                    in_span[v] = 1;
                }
            span = std::move(next);
        }

        to_vector_.assign(big_.order() * dim_, 0);
        from_vector_.assign(big_.order(), 0);
        for (std::uint64_t index = 0; index < big_.order(); ++index) {
            const auto v = point_from_index(base_, dim_, index);
            std::uint64_t value = 0;
            for (std::size_t i = 0; i < dim_; ++i)
                value = big_.add(value, big_.mul(embedding_[v.components[i]], basis[i]));
            from_vector_[index] = value;
            std::copy(v.components.begin(), v.components.end(), to_vector_.begin() + value * dim_);
        }
    }

    auto VectorView::to_vector(const FieldElement & x) const -> VectorElement
    {
        if (! (x.field() == big_))
            throw InvalidArgument("element does not belong to " + big_.describe());
        VectorElement v;
        if (prime_base_) {
            v.components.assign(x.coeffs().begin(), x.coeffs().end());
            return v;
        }
        const auto code = x.code();
        v.components.assign(to_vector_.begin() + code * dim_, to_vector_.begin() + (code + 1) * dim_);
        return v;
    }

    auto VectorView::from_vector(const VectorElement & v) const -> FieldElement
    {
        if (v.components.size() != dim_)
            throw InvalidArgument("vector dimension mismatch");
        const auto index = point_index(base_, v);
        if (prime_base_)
            return big_.element(index);
        return big_.element(from_vector_[index]);
    }

    auto VectorView::embed(const FieldElement & base_element) const -> FieldElement
    {
        if (! (base_element.field() == base_))
            throw InvalidArgument("element does not belong to " + base_.describe());
        if (prime_base_)
            return big_.element(base_element.code());
        return big_.element(embedding_[base_element.code()]);
    }
}
