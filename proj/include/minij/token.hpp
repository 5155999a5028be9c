#pragma once

#include <string>
#include <vector>

#include "minij/common.hpp"

namespace minij {

enum class TokenKind {
    // punctuation
    LBrace, RBrace, LParen, RParen, LBracket, RBracket,
    Semi, Comma, Dot, Assign, At,
    // literals and names
    Identifier, IntLit, DoubleLit, StringLit, CharLit,
    // keywords
    KwPackage, KwImport, KwClass, KwInterface, KwExtends, KwImplements,
    KwPublic, KwProtected, KwPrivate, KwStatic, KwFinal, KwAbstract,
    KwVoid, KwBoolean, KwChar, KwByte, KwShort, KwInt, KwLong, KwFloat, KwDouble,
    KwReturn, KwNew, KwThis, KwTrue, KwFalse, KwNull,
    EndOfFile,
};

inline const char* tokenKindName(TokenKind k) {
    switch (k) {
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::Semi: return "';'";
        case TokenKind::Comma: return "','";
        case TokenKind::Dot: return "'.'";
        case TokenKind::Assign: return "'='";
        case TokenKind::At: return "'@'";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::IntLit: return "int literal";
        case TokenKind::DoubleLit: return "double literal";
        case TokenKind::StringLit: return "string literal";
        case TokenKind::CharLit: return "char literal";
        case TokenKind::KwPackage: return "'package'";
        case TokenKind::KwImport: return "'import'";
        case TokenKind::KwClass: return "'class'";
        case TokenKind::KwInterface: return "'interface'";
        case TokenKind::KwExtends: return "'extends'";
        case TokenKind::KwImplements: return "'implements'";
        case TokenKind::KwPublic: return "'public'";
        case TokenKind::KwProtected: return "'protected'";
        case TokenKind::KwPrivate: return "'private'";
        case TokenKind::KwStatic: return "'static'";
        case TokenKind::KwFinal: return "'final'";
        case TokenKind::KwAbstract: return "'abstract'";
        case TokenKind::KwVoid: return "'void'";
        case TokenKind::KwBoolean: return "'boolean'";
        case TokenKind::KwChar: return "'char'";
        case TokenKind::KwByte: return "'byte'";
        case TokenKind::KwShort: return "'short'";
        case TokenKind::KwInt: return "'int'";
        case TokenKind::KwLong: return "'long'";
        case TokenKind::KwFloat: return "'float'";
        case TokenKind::KwDouble: return "'double'";
        case TokenKind::KwReturn: return "'return'";
        case TokenKind::KwNew: return "'new'";
        case TokenKind::KwThis: return "'this'";
        case TokenKind::KwTrue: return "'true'";
        case TokenKind::KwFalse: return "'false'";
        case TokenKind::KwNull: return "'null'";
        case TokenKind::EndOfFile: return "end of file";
    }
    return "?";
}

struct Token {
    TokenKind kind;
    std::string text;  // raw lexeme (literals keep quotes/escapes)
    SourceLocation location;

    bool is(TokenKind k) const { return kind == k; }
};

using TokenStream = std::vector<Token>;

}  // namespace minij
