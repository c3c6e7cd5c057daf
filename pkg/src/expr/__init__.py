"""正規表現・SHUF式・α-SHUF式の共通構文木と変換を提供するパッケージ。"""
