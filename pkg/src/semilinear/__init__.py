"""線形集合・半線形集合の演算と、α-SHUF式との相互変換を提供するパッケージ。"""
