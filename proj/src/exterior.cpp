#include "smae/exterior.hpp"

#include "smae/error.hpp"
#include "smae/expr/parser.hpp"

#include <algorithm>
#include <bit>

namespace smae {

namespace basis {

namespace {

struct Tables {
    std::array<std::vector<unsigned>, 5> masks;
    std::array<int, 16> index{};

    Tables()
    {
        // Lexicographic order on sorted index lists.
        std::vector<std::vector<int>> lists;
        for (unsigned m = 0; m < 16; ++m) {
            std::vector<int> l;
            for (int i = 0; i < 4; ++i)
                if (m & (1u << i))
                    l.push_back(i);
            lists.push_back(l);
        }
        for (int k = 0; k <= 4; ++k) {
            for (unsigned m = 0; m < 16; ++m)
                if (std::popcount(m) == k)
                    masks[k].push_back(m);
            std::sort(masks[k].begin(), masks[k].end(),
                      [&](unsigned a, unsigned b) { return lists[a] < lists[b]; });
            for (std::size_t i = 0; i < masks[k].size(); ++i)
                index[masks[k][i]] = static_cast<int>(i);
        }
    }
};

const Tables& tables()
{
    static const Tables t;
    return t;
}

constexpr const char* kNames[4] = {"dx", "dp", "dy", "dq"};

} // namespace

const std::vector<unsigned>& masks(int degree)
{
    return tables().masks.at(degree);
}

int index_of(unsigned mask)
{
    return tables().index[mask];
}

int degree_of(unsigned mask)
{
    return std::popcount(mask);
}

int wedge_sign(unsigned a, unsigned b)
{
    if (a & b)
        return 0;
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        if (a & (1u << i))
            inversions += std::popcount(b & ((1u << i) - 1));
    return inversions % 2 == 0 ? 1 : -1;
}

std::string name(unsigned mask)
{
    if (mask == 0)
        return "1";
    std::string s;
    for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) {
            if (!s.empty())
                s += '^';
            s += kNames[i];
        }
    return s;
}

} // namespace basis

// ---------------------------------------------------------------- VectorField

VectorField VectorField::coordinate(int i)
{
    VectorField v;
    v.c_.at(i) = Scalar(1);
    return v;
}

bool VectorField::is_zero() const
{
    for (const auto& s : c_)
        if (!s.is_zero())
            return false;
    return true;
}

VectorField VectorField::operator-() const
{
    return VectorField(-c_[0], -c_[1], -c_[2], -c_[3]);
}

VectorField operator+(const VectorField& a, const VectorField& b)
{
    return VectorField(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]);
}

VectorField operator-(const VectorField& a, const VectorField& b)
{
    return VectorField(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]);
}

VectorField operator*(const Scalar& f, const VectorField& v)
{
    if (f.is_one())
        return v;
    return VectorField(f * v[0], f * v[1], f * v[2], f * v[3]);
}

Scalar VectorField::apply(const Scalar& f) const
{
    Scalar r;
    for (int a = 0; a < 4; ++a)
        if (!c_[a].is_zero())
            r += c_[a] * f.total_derivative(a);
    return r;
}

std::string VectorField::to_string() const
{
    return c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ", " + c_[3].to_string();
}

VectorField lie_bracket(const VectorField& x, const VectorField& y)
{
    VectorField r;
    for (int i = 0; i < 4; ++i)
        r[i] = x.apply(y[i]) - y.apply(x[i]);
    return r;
}

// ---------------------------------------------------------------- KForm

KForm::KForm(int degree) : degree_(degree)
{
    if (degree < 0 || degree > 4)
        throw DomainError("form degree out of range");
    c_.assign(basis::masks(degree).size(), Scalar());
}

KForm KForm::scalar(const Scalar& f)
{
    KForm k(0);
    k.c_[0] = f;
    return k;
}

KForm KForm::basis_form(unsigned mask, Scalar coef)
{
    KForm k(basis::degree_of(mask));
    k.coef(mask) = std::move(coef);
    return k;
}

bool KForm::is_zero() const
{
    for (const auto& s : c_)
        if (!s.is_zero())
            return false;
    return true;
}

KForm KForm::operator-() const
{
    KForm r = *this;
    for (auto& s : r.c_)
        s = -s;
    return r;
}

KForm operator+(const KForm& a, const KForm& b)
{
    if (a.degree_ != b.degree_) {
        if (b.is_zero())
            return a;
        if (a.is_zero())
            return b;
        throw DomainError("adding forms of different degrees");
    }
    KForm r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] += b.c_[i];
    return r;
}

KForm operator-(const KForm& a, const KForm& b)
{
    return a + (-b);
}

KForm operator*(const Scalar& f, const KForm& a)
{
    KForm r = a;
    for (auto& s : r.c_)
        if (!s.is_zero())
            s = f * s;
    return r;
}

namespace {

// D_i _| a for a coordinate field.
KForm insert_coordinate(int i, const KForm& a)
{
    if (a.degree() == 0)
        return KForm(0);
    KForm r(a.degree() - 1);
    const unsigned bit = 1u << i;
    for (unsigned m : basis::masks(a.degree())) {
        if (!(m & bit))
            continue;
        const Scalar& c = a.coef(m);
        if (c.is_zero())
            continue;
        int pos = std::popcount(m & (bit - 1));
        r.coef(m & ~bit) += pos % 2 == 0 ? c : -c;
    }
    return r;
}

} // namespace

Scalar KForm::evaluate(const std::vector<VectorField>& args) const
{
    if (static_cast<int>(args.size()) != degree_)
        throw DomainError("form evaluated on the wrong number of arguments");
    KForm cur = *this;
    for (const auto& x : args)
        cur = insert(x, cur);
    return cur.c_[0];
}

std::string KForm::to_string() const
{
    if (degree_ == 0)
        return c_[0].to_string();
    std::string out;
    for (unsigned m : basis::masks(degree_)) {
        const Scalar& c = coef(m);
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        if (c.is_one())
            out += basis::name(m);
        else
            out += "(" + c.to_string() + ")*" + basis::name(m);
    }
    return out.empty() ? "0" : out;
}

KForm wedge(const KForm& a, const KForm& b)
{
    int k = a.degree() + b.degree();
    if (k > 4)
        return KForm(4);
    KForm r(k);
    for (unsigned ma : basis::masks(a.degree())) {
        const Scalar& ca = a.coef(ma);
        if (ca.is_zero())
            continue;
        for (unsigned mb : basis::masks(b.degree())) {
            int s = basis::wedge_sign(ma, mb);
            if (s == 0)
                continue;
            const Scalar& cb = b.coef(mb);
            if (cb.is_zero())
                continue;
            Scalar prod = ca * cb;
            r.coef(ma | mb) += s > 0 ? prod : -prod;
        }
    }
    return r;
}

KForm ext_d(const KForm& a)
{
    if (a.degree() == 4)
        return KForm(4);
    KForm r(a.degree() + 1);
    for (unsigned m : basis::masks(a.degree())) {
        const Scalar& c = a.coef(m);
        if (c.is_zero())
            continue;
        for (int i = 0; i < 4; ++i) {
            unsigned bit = 1u << i;
            if (m & bit)
                continue;
            Scalar dc = c.total_derivative(i);
            if (dc.is_zero())
                continue;
            r.coef(m | bit) += basis::wedge_sign(bit, m) > 0 ? dc : -dc;
        }
    }
    return r;
}

KForm insert(const VectorField& x, const KForm& a)
{
    if (a.degree() == 0)
        return KForm(0);
    KForm r(a.degree() - 1);
    for (int i = 0; i < 4; ++i) {
        if (x[i].is_zero())
            continue;
        r = r + x[i] * insert_coordinate(i, a);
    }
    return r;
}

KForm lie_derivative(const VectorField& x, const KForm& a)
{
    KForm r = insert(x, ext_d(a));
    if (a.degree() > 0)
        r = r + ext_d(insert(x, a));
    return r;
}

// ---------------------------------------------------------------- MultiVector

MultiVector::MultiVector(int r) : r_(r)
{
    if (r < 0 || r > 4)
        throw DomainError("multivector multiplicity out of range");
    c_.assign(basis::masks(r).size(), Scalar());
}

MultiVector MultiVector::from_field(const VectorField& x)
{
    MultiVector w(1);
    for (int i = 0; i < 4; ++i)
        w.coef(1u << i) = x[i];
    return w;
}

MultiVector operator+(const MultiVector& a, const MultiVector& b)
{
    if (a.r_ != b.r_)
        throw DomainError("adding multivectors of different multiplicities");
    MultiVector r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] += b.c_[i];
    return r;
}

MultiVector operator*(const Scalar& f, const MultiVector& a)
{
    MultiVector r = a;
    for (auto& s : r.c_)
        s = f * s;
    return r;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b)
{
    int k = a.multiplicity() + b.multiplicity();
    if (k > 4)
        return MultiVector(4);
    MultiVector r(k);
    for (unsigned ma : basis::masks(a.multiplicity()))
        for (unsigned mb : basis::masks(b.multiplicity())) {
            int s = basis::wedge_sign(ma, mb);
            if (s == 0 || a.coef(ma).is_zero() || b.coef(mb).is_zero())
                continue;
            Scalar prod = a.coef(ma) * b.coef(mb);
            r.coef(ma | mb) += s > 0 ? prod : -prod;
        }
    return r;
}

MultiVector wedge(const std::vector<VectorField>& fields)
{
    MultiVector w(0);
    w.coef(0) = Scalar(1);
    for (const auto& x : fields)
        w = wedge(w, MultiVector::from_field(x));
    return w;
}

KForm insert_multi(const MultiVector& w, const KForm& a)
{
    int r = w.multiplicity();
    if (r > a.degree())
        throw DomainError("multiplicity exceeds form degree");
    KForm out(a.degree() - r);
    for (unsigned m : basis::masks(r)) {
        const Scalar& c = w.coef(m);
        if (c.is_zero())
            continue;
        KForm cur = a;
        for (int i = 0; i < 4; ++i)
            if (m & (1u << i))
                cur = insert_coordinate(i, cur);
        out = out + c * cur;
    }
    return out;
}

// ---------------------------------------------------------------- VectorValuedForm

VectorValuedForm::VectorValuedForm(int degree)
    : degree_(degree), comp_{KForm(degree), KForm(degree), KForm(degree), KForm(degree)}
{
}

VectorValuedForm VectorValuedForm::decomposable(const KForm& a, const VectorField& x)
{
    VectorValuedForm w(a.degree());
    for (int i = 0; i < 4; ++i)
        w.comp_[i] = x[i] * a;
    return w;
}

VectorValuedForm VectorValuedForm::identity()
{
    VectorValuedForm w(1);
    for (int i = 0; i < 4; ++i)
        w.comp_[i] = KForm::differential(i);
    return w;
}

VectorValuedForm VectorValuedForm::from_matrix(const Matrix<Scalar>& m)
{
    VectorValuedForm w(1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            w.comp_[i].coef(1u << j) = m.at(i).at(j);
    return w;
}

VectorField VectorValuedForm::evaluate(const std::vector<VectorField>& args) const
{
    VectorField r;
    for (int i = 0; i < 4; ++i)
        r[i] = comp_[i].evaluate(args);
    return r;
}

Matrix<Scalar> VectorValuedForm::matrix() const
{
    if (degree_ != 1)
        throw DomainError("only vector-valued 1-forms are endomorphisms");
    Matrix<Scalar> m(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i][j] = comp_[i].coef(1u << j);
    return m;
}

VectorValuedForm operator+(const VectorValuedForm& a, const VectorValuedForm& b)
{
    VectorValuedForm r = a;
    for (int i = 0; i < 4; ++i)
        r.comp_[i] = a.comp_[i] + b.comp_[i];
    return r;
}

VectorValuedForm operator-(const VectorValuedForm& a, const VectorValuedForm& b)
{
    VectorValuedForm r = a;
    for (int i = 0; i < 4; ++i)
        r.comp_[i] = a.comp_[i] - b.comp_[i];
    return r;
}

VectorValuedForm operator*(const Scalar& f, const VectorValuedForm& a)
{
    VectorValuedForm r = a;
    for (int i = 0; i < 4; ++i)
        r.comp_[i] = f * a.comp_[i];
    return r;
}

bool VectorValuedForm::is_zero() const
{
    for (const auto& c : comp_)
        if (!c.is_zero())
            return false;
    return true;
}

VectorValuedForm compose(const VectorValuedForm& a, const VectorValuedForm& b)
{
    auto ma = a.matrix(), mb = b.matrix();
    Matrix<Scalar> m(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                if (!ma[i][k].is_zero() && !mb[k][j].is_zero())
                    m[i][j] += ma[i][k] * mb[k][j];
    return VectorValuedForm::from_matrix(m);
}

KForm insert_vvform(const VectorValuedForm& w, const KForm& b)
{
    const int k = w.degree(), r = b.degree();
    if (r == 0)
        return KForm(std::max(k - 1, 0));
    const int n = k + r - 1;
    if (n > 4)
        return KForm(4);
    KForm out(n);
    // (w _| b)(X_1..X_n) = sum over (k, r-1)-shuffles s of
    //   sign(s) b(w(X_s(1..k)), X_s(k+1..n)), evaluated on basis fields.
    for (unsigned m : basis::masks(n)) {
        Scalar total;
        for (unsigned s = m;; s = (s - 1) & m) {
            if (std::popcount(s) == k) {
                unsigned t = m & ~s;
                int sign = basis::wedge_sign(s, t);
                for (int i = 0; i < 4; ++i) {
                    const Scalar& wi = w.component(i).coef(s);
                    if (wi.is_zero())
                        continue;
                    int bs = basis::wedge_sign(1u << i, t);
                    if (bs == 0)
                        continue;
                    const Scalar& bc = b.coef((1u << i) | t);
                    if (bc.is_zero())
                        continue;
                    Scalar term = wi * bc;
                    total += sign * bs > 0 ? term : -term;
                }
            }
            if (s == 0)
                break;
        }
        out.coef(m) = total;
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

bool is_differential_name(const std::string& n)
{
    return n == "dx" || n == "dp" || n == "dy" || n == "dq";
}

bool mentions_differential(const expr::Node& n)
{
    if (n.kind == expr::Node::Kind::Ident && is_differential_name(n.name))
        return true;
    if (n.kind == expr::Node::Kind::Wedge)
        return true;
    for (const auto& c : n.children)
        if (mentions_differential(*c))
            return true;
    return false;
}

KForm evaluate_form(const expr::Node& n, const expr::VariableContext& ctx)
{
    using K = expr::Node::Kind;
    if (!mentions_differential(n))
        return KForm::scalar(expr::evaluate(n, ctx));
    switch (n.kind) {
    case K::Ident: {
        static const std::string names[4] = {"dx", "dp", "dy", "dq"};
        for (int i = 0; i < 4; ++i)
            if (n.name == names[i])
                return KForm::differential(i);
        break;
    }
    case K::Neg:
        return -evaluate_form(*n.children[0], ctx);
    case K::Add:
    case K::Sub: {
        KForm a = evaluate_form(*n.children[0], ctx);
        KForm b = evaluate_form(*n.children[1], ctx);
        if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
            throw ParseError(n.position, "sum of forms of different degrees");
        return n.kind == K::Add ? a + b : a - b;
    }
    case K::Mul:
    case K::Wedge: {
        KForm a = evaluate_form(*n.children[0], ctx);
        KForm b = evaluate_form(*n.children[1], ctx);
        if (n.kind == K::Mul && a.degree() > 0 && b.degree() > 0)
            throw ParseError(n.position, "use '^' for the wedge product of forms");
        if (a.degree() + b.degree() > 4)
            throw ParseError(n.position, "wedge degree exceeds 4");
        return wedge(a, b);
    }
    case K::Div: {
        KForm a = evaluate_form(*n.children[0], ctx);
        if (mentions_differential(*n.children[1]))
            throw ParseError(n.children[1]->position, "division by a form");
        Scalar d = expr::evaluate(*n.children[1], ctx);
        if (d.is_zero())
            throw ParseError(n.children[1]->position, "division by zero");
        return d.inverse() * a;
    }
    default:
        break;
    }
    throw ParseError(n.position, "unsupported form syntax");
}

} // namespace

KForm parse_form(std::string_view text, const expr::VariableContext& ctx)
{
    auto tree = expr::parse_tree(text);
    return evaluate_form(*tree, ctx);
}

VectorField parse_vector_field(std::string_view text, const expr::VariableContext& ctx)
{
    auto parts = expr::split_top_level(text, ',');
    if (parts.size() != 4)
        throw ParseError(0, "a vector field needs 4 comma-separated components, got " +
                                std::to_string(parts.size()));
    VectorField v;
    std::size_t offset = 0;
    for (int i = 0; i < 4; ++i) {
        try {
            v[i] = expr::parse(parts[i], ctx);
        } catch (const ParseError& e) {
            throw ParseError(offset + e.position(), e.detail());
        }
        offset += parts[i].size() + 1;
    }
    return v;
}

} // namespace smae
