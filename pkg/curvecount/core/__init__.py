"""
Configuração, erros, cache e logging
"""
