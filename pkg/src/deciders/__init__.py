"""言語クラスに関する厳密・有界の判定手続きを提供するパッケージ。"""
