#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minij/common.hpp"

namespace minij {

enum class Modifier { Public, Protected, Private, Static, Final, Abstract };

inline const char* modifierName(Modifier m) {
    switch (m) {
        case Modifier::Public: return "public";
        case Modifier::Protected: return "protected";
        case Modifier::Private: return "private";
        case Modifier::Static: return "static";
        case Modifier::Final: return "final";
        case Modifier::Abstract: return "abstract";
    }
    return "?";
}

/// Type as written in source: a possibly dotted name plus array dimensions.
/// Resolution to a canonical type happens later.
struct TypeName {
    std::string text;   // "int", "B", "lib.util.B"
    int arrayDims = 0;
    SourceLocation location;  // first token of the name
};

struct Annotation {
    std::string name;
    SourceLocation location;
};

// --- expressions -----------------------------------------------------------

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class LiteralKind { Int, Double, String, Char, Bool, Null };

struct LiteralExpr {
    LiteralKind kind;
    std::string text;  // raw lexeme ("true", "42", "\"s\"")
};

struct NameExpr {
    std::string name;
};

struct ThisExpr {};

struct NewExpr {
    TypeName type;
    std::vector<ExprPtr> args;
};

struct CastExpr {
    TypeName type;
    ExprPtr operand;
};

struct FieldAccessExpr {
    ExprPtr receiver;
    std::string name;
    SourceLocation nameLocation;
};

struct CallExpr {
    ExprPtr receiver;
    std::string name;
    SourceLocation nameLocation;
    std::vector<ExprPtr> args;
};

struct Expr {
    std::variant<LiteralExpr, NameExpr, ThisExpr, NewExpr, CastExpr, FieldAccessExpr, CallExpr> node;
    SourceLocation location;  // first token of the expression

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
    template <class T>
    T* as() {
        return std::get_if<T>(&node);
    }
};

// --- statements -------------------------------------------------------------

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct LocalVarStmt {
    TypeName type;
    std::string name;
    SourceLocation nameLocation;
    ExprPtr init;  // may be null
};

struct AssignStmt {
    ExprPtr target;  // NameExpr or FieldAccessExpr
    ExprPtr value;
};

struct ExprStmt {
    ExprPtr expr;
};

struct ReturnStmt {
    ExprPtr value;  // may be null
};

struct BlockStmt {
    std::vector<StmtPtr> body;
};

struct Stmt {
    std::variant<LocalVarStmt, AssignStmt, ExprStmt, ReturnStmt, BlockStmt> node;
    SourceLocation location;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

// --- declarations ------------------------------------------------------------

struct Param {
    TypeName type;
    std::string name;
    SourceLocation location;
};

struct FieldAst {
    std::vector<Annotation> annotations;
    std::vector<Modifier> modifiers;
    TypeName type;
    std::string name;
    SourceLocation nameLocation;
    ExprPtr init;  // may be null
};

struct MethodAst {
    std::vector<Annotation> annotations;
    std::vector<Modifier> modifiers;
    TypeName returnType;
    std::string name;
    SourceLocation nameLocation;
    std::vector<Param> params;
    std::optional<BlockStmt> body;  // nullopt when declared with ';'
};

struct CtorAst {
    std::vector<Annotation> annotations;
    std::vector<Modifier> modifiers;
    std::string name;  // always the enclosing type's name
    SourceLocation nameLocation;
    std::vector<Param> params;
    BlockStmt body;
};

struct MemberAst {
    std::variant<FieldAst, MethodAst, CtorAst> node;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

enum class TypeKind { Class, Interface };

struct SupertypeRef {
    TypeName name;
    bool viaExtends;  // extends clause vs implements clause
};

struct TypeDeclAst {
    std::vector<Annotation> annotations;
    std::vector<Modifier> modifiers;
    TypeKind kind = TypeKind::Class;
    std::string name;
    SourceLocation nameLocation;
    std::optional<TypeName> extendsClass;       // classes only
    std::vector<TypeName> superInterfaces;      // implements (class) / extends (interface)
    std::vector<MemberAst> members;

    bool hasModifier(Modifier m) const {
        for (Modifier mod : modifiers)
            if (mod == m) return true;
        return false;
    }
    bool hasAnnotation(const std::string& n) const {
        for (const auto& a : annotations)
            if (a.name == n) return true;
        return false;
    }
};

struct ImportDecl {
    std::string qualifiedName;
    SourceLocation location;  // first token of the qualified name
};

struct CompilationUnit {
    std::string file;
    std::string packageName;
    SourceLocation packageLocation;
    std::vector<ImportDecl> imports;
    std::vector<TypeDeclAst> types;
};

inline bool hasModifier(const std::vector<Modifier>& mods, Modifier m) {
    for (Modifier mod : mods)
        if (mod == m) return true;
    return false;
}

inline bool hasAnnotation(const std::vector<Annotation>& annots, const std::string& name) {
    for (const auto& a : annots)
        if (a.name == name) return true;
    return false;
}

}  // namespace minij
